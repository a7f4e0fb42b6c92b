#!/usr/bin/env python3
"""
Custom Exceptions
"""

from enum import Enum

class ErrorCategory(Enum):
    USAGE = "usage"
    INTERNAL = "internal"

    def __repr__(self):
        return self.name

class MotzkinwareError(Exception):
    """ Base error.  'text_key' names a templated message in one of the *_texts.yaml files, 'template_values' fills it. """

    category:ErrorCategory = ErrorCategory.INTERNAL

    def __init__(self, text_key:str = "", template_values:dict = None, *args: object) -> None:
        self.text_key = "internal-error"
        if text_key is not None and len(text_key.strip()) > 0:
            self.text_key = text_key
        self.template_values = template_values if template_values is not None else {}
        super().__init__(self.text_key, *args)

class UsageError(MotzkinwareError):
    category = ErrorCategory.USAGE

class ConfigError(MotzkinwareError):
    pass

class SeriesError(UsageError):
    pass

class TreesError(UsageError):
    pass

class SamplerError(UsageError):
    pass

class GenfunError(MotzkinwareError):
    pass

class AsymptoticsError(MotzkinwareError):
    pass
