#!/usr/bin/env python3
"""
Configuration loading for the sampler package
"""

import logging
from pathlib import Path
from utils.config import ConfigBase
from utils.load_yaml import config_section
import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

SAMPLER_CONFIG_YAML = "sampler_config.yaml"
SAMPLER_CONFIG_YAML_PATH = str(Path(__file__).absolute().parent.joinpath(SAMPLER_CONFIG_YAML))

def config() -> dict:

    return config_section(ConfigBase.getConfigPath(SAMPLER_CONFIG_YAML_PATH), "sampler-config")
