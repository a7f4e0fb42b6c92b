#!/usr/bin/env python3
"""
Configuration loading for the trees package
"""

import logging
from pathlib import Path
from utils.config import ConfigBase
from utils.load_yaml import config_section
import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

TREES_CONFIG_YAML = "trees_config.yaml"
TREES_CONFIG_YAML_PATH = str(Path(__file__).absolute().parent.joinpath(TREES_CONFIG_YAML))

def config() -> dict:

    return config_section(ConfigBase.getConfigPath(TREES_CONFIG_YAML_PATH), "trees-config")
