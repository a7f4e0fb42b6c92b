#!/usr/bin/env python3
"""
Configuration loading for the command actions
"""

import logging
from pathlib import Path
from utils.config import ConfigBase
from utils.load_yaml import config_section
import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

ACTIONS_CONFIG_YAML = "actions_config.yaml"
ACTIONS_CONFIG_YAML_PATH = str(Path(__file__).absolute().parent.joinpath(ACTIONS_CONFIG_YAML))
ACTIONS_TEXTS_YAML = "actions_texts.yaml"
ACTIONS_TEXTS_YAML_PATH = str(Path(__file__).absolute().parent.joinpath(ACTIONS_TEXTS_YAML))

def config() -> dict:

    return config_section(ConfigBase.getConfigPath(ACTIONS_CONFIG_YAML_PATH), "actions-config")

def command_config(command:str) -> dict:

    return config().get(command, {}) or {}
