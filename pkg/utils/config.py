#!/usr/bin/env python3
"""
Sets the base directory from which all configuration files are loaded
"""

import logging
import os
from pathlib import Path

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

CONFIG_DIR_ENV = "MOTZKINWARE_CONFIG_DIR"

class ConfigBase:

    install_dir:str = str(Path(__file__).absolute().parent.parent)
    base_dir:str = install_dir

    @classmethod
    def init(cls):

        cls._set_install_directory()

        suggested_base_dir = os.getenv(CONFIG_DIR_ENV)
        if suggested_base_dir is not None:
            suggested_base_dir = os.path.expandvars(os.path.expanduser(suggested_base_dir))

            if os.path.isdir(suggested_base_dir):
                cls.base_dir = suggested_base_dir
                logger.info(f"Using configuration in '{suggested_base_dir}'")
                return

            logger.warning(f"{CONFIG_DIR_ENV} is set to '{suggested_base_dir}' but it is not a directory.  Using configuration deployed with code.")

        cls.base_dir = cls.install_dir
        logger.debug("Using configuration deployed with code.")

    @classmethod
    def _set_install_directory(cls):
        """
        Sets the install directory.  The install directory is the root directory of the motzkinware packages.
        """

        # This file has path utils/config.py
        cls.install_dir = str(Path(__file__).absolute().parent.parent)

    @classmethod
    def getConfigPath(cls, config_path:str) -> str:
        """ Returns the config path relative to the config base directory.

        If passed a path already under base_dir, just return it.
        If passed an absolute path under the install dir, re-root it under base_dir, falling back to the
        shipped file when the override directory does not provide one.
        If passed a relative path, resolve it against base_dir (then the install dir).
        """
        config_path_obj = Path(config_path).expanduser()
        if config_path_obj.is_absolute() and config_path_obj.is_relative_to(cls.base_dir):
            return str(config_path_obj)

        if config_path_obj.is_absolute():
            if not config_path_obj.is_relative_to(cls.install_dir):
                return str(config_path_obj)
            relative_path = config_path_obj.relative_to(cls.install_dir)
        else:
            relative_path = config_path_obj

        override_path = Path(cls.base_dir).joinpath(relative_path)
        if override_path.exists():
            return str(override_path)

        return str(Path(cls.install_dir).joinpath(relative_path))
