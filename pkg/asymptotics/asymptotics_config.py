#!/usr/bin/env python3
"""
Configuration loading for the asymptotics package
"""

import logging
from fractions import Fraction
from pathlib import Path
from utils.config import ConfigBase
from utils.load_yaml import config_section
import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

ASYMPTOTICS_CONFIG_YAML = "asymptotics_config.yaml"
ASYMPTOTICS_CONFIG_YAML_PATH = str(Path(__file__).absolute().parent.joinpath(ASYMPTOTICS_CONFIG_YAML))

DEFAULTS = {
    "max-exact-level": 18,
    "exact-levels": 12,
    "working-digits": 100,
    "default-cutoff": 20,
    "reference-cutoff": 200,
    "growth-base": "29/10",
    "float-digits": 30,
}

def config() -> dict:

    return DEFAULTS | config_section(ConfigBase.getConfigPath(ASYMPTOTICS_CONFIG_YAML_PATH), "asymptotics-config")

def growth_base() -> Fraction:
    return Fraction(str(config()["growth-base"]))
