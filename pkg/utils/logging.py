#!/usr/bin/env python3

import os
import logging

LOGGERNAME = 'motzkinware'
LOG_LEVEL_ENV = "MOTZKINWARE_LOG_LEVEL"

_configured = False

def getLoggerName(name):

    return LOGGERNAME + '.' + name

def configureLogging():

    global _configured

    # Every entry point calls this, only attach the handler once
    if _configured:
        return

    logger = logging.getLogger(LOGGERNAME)

    log_level = logging.WARNING

    if (env_log_level_str := os.getenv(LOG_LEVEL_ENV)) is not None:
        env_log_level = logging.getLevelName(env_log_level_str.upper())
        if isinstance(env_log_level, int):
            log_level = env_log_level

    logger.setLevel(log_level)

    logger.propagate = False

    # stderr only, stdout is reserved for the command payload
    ch = logging.StreamHandler()
    ch.setLevel(logging.DEBUG)

    formatter = logging.Formatter('%(levelname)s:%(name)s:%(funcName)s:%(message)s')

    ch.setFormatter(formatter)

    logger.addHandler(ch)

    _configured = True
