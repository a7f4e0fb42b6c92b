#!/usr/bin/env python3
"""
Configuration loading for the genfun package
"""

import logging
from pathlib import Path
from utils.config import ConfigBase
from utils.load_yaml import config_section
import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

GENFUN_CONFIG_YAML = "genfun_config.yaml"
GENFUN_CONFIG_YAML_PATH = str(Path(__file__).absolute().parent.joinpath(GENFUN_CONFIG_YAML))

def config() -> dict:

    return config_section(ConfigBase.getConfigPath(GENFUN_CONFIG_YAML_PATH), "genfun-config")

def cache_size() -> int:
    return config().get("level-cache-size", 128)
