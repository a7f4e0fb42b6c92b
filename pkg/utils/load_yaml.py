#!/usr/bin/env python3
"""
Loads YAML configuration and texts, and dumps output objects as YAML
"""

import logging
from io import StringIO
from utils.error import ConfigError
from ruamel.yaml import YAML

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

##
## Reading
##

_cache:dict = {}

def yaml_file_to_dict(path:str) -> dict:
    """ Loads a YAML file (configuration files are read-only, so each path is parsed once per process) """

    if path in _cache:
        return _cache[path]

    yaml = YAML(typ='safe')
    logger.debug(f"Loading YAML '{path}'")

    try:
        file = open(path, 'r')
    except OSError:
        logger.error(f"Could not open YAML file '{path}'")
        raise ConfigError("config.missing-file", {"path":path})

    with file:
        yamldict = yaml.load(file)

    if yamldict is None:
        yamldict = {}

    _cache[path] = yamldict
    return yamldict

def yaml_str_to_dict(yamlstr:str) -> dict:

    yaml = YAML(typ='safe')
    yamldict = yaml.load(yamlstr)
    return yamldict if yamldict is not None else {}

def config_section(path:str, rootkey:str) -> dict:
    """ Returns the 'rootkey' section of a configuration file, an empty dict if absent """

    section = yaml_file_to_dict(path).get(rootkey)
    if section is None:
        logger.warning(f"Configuration file '{path}' has no '{rootkey}' section")
        return {}
    return section

##
## Writing
##

def _get_yaml_object():

    yaml = YAML(typ='safe')
    yaml.default_flow_style = False
    yaml.indent = 4
    yaml.sort_base_mapping_type_on_output = False
    return yaml

def class_to_yaml_str(output_instance) -> str:
    """ Output plain dicts, lists and scalars as block-style YAML """

    yaml = _get_yaml_object()

    with StringIO() as buf:
        yaml.dump(output_instance, buf)

        return buf.getvalue()
