#!/usr/bin/env python3
"""
Renders templated texts from *_texts.yaml files
"""

import logging
from utils.load_yaml import yaml_file_to_dict

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

from jinja2 import Environment, StrictUndefined, UndefinedError
env = Environment(autoescape=False, undefined=StrictUndefined, keep_trailing_newline=False)

DEFAULT_TEXTS = "default"

class Texts:
    """ A set of templated texts, keyed by text key, as found under 'output-texts' in a texts file """

    def __init__(self, texts:dict = None):

        self.texts = dict(texts) if texts is not None else {}

    @classmethod
    def from_files(cls, *paths:str) -> "Texts":
        """ Later files override earlier ones key by key """

        texts = {}
        for path in paths:
            file_texts = yaml_file_to_dict(path).get("output-texts", {}).get(DEFAULT_TEXTS, {})
            texts = texts | file_texts
        return cls(texts)

    def has(self, text_key:str) -> bool:
        return text_key in self.texts

    def render(self, text_key:str, context:dict = None, output_format:str = None) -> str:

        if context is None:
            context = {}

        if (text := self.texts.get(text_key)) is None:
            logger.warning(f"Could not find text for key '{text_key}'")
            return f"Could not find text for key '{text_key}'"

        # Texts may have variants per output format e.g. a shorter line for csv
        if isinstance(text, dict):
            text = text.get(output_format, text.get(DEFAULT_TEXTS, ""))

        try:
            return env.from_string(text).render(context)
        except UndefinedError as undefined:
            logger.error(f"Text '{text_key}' references a value that was not supplied - {undefined}")
            return text
