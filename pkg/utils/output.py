#!/usr/bin/env python3
"""
Class FormatOutput
"""

import csv
import io
import logging
from enum import Enum
from pathlib import Path
from utils.config import ConfigBase
from utils import load_yaml
from utils.request import Request
from utils.texts import Texts
import jsonpickle

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

OUTPUT_TEXTS_YAML = "output_texts.yaml"
OUTPUT_TEXTS_YAML_PATH = str(Path(__file__).absolute().parent.joinpath(OUTPUT_TEXTS_YAML))

class OutputType(Enum):
    ERROR = 0
    INFO = 1
    SUCCESS = 2
    NOT_SET = -1

    def __repr__(self):
        return self.name

class FormatOutput:
    """ The OutputRecord of a command: command, parameters, result, description, results and artifact_version.

    'results' is the structured payload.  'rows'/'columns' is the tabular view of the same payload used by the
    text and csv renderers.
    """

    def __init__(self, output_config:dict = None):

        if output_config is None:
            output_config = {}
        text_files = [ConfigBase.getConfigPath(OUTPUT_TEXTS_YAML_PATH)]
        # One texts file or a list of them, later files override earlier ones
        template_text_files = output_config.get("template-text-file")
        if isinstance(template_text_files, str):
            template_text_files = [template_text_files]
        for template_text_file in template_text_files or []:
            text_files.append(ConfigBase.getConfigPath(template_text_file))
        self.texts = Texts.from_files(*text_files)

        self.information = self.texts.render("information")
        self.success = self.texts.render("success")
        self.error = self.texts.render("error")

        self.type = OutputType.NOT_SET
        self.description = None
        self.details = None
        self.columns = []
        self.rows = []

    def _get_state(self):

        output = {}
        output["command"] = Request.command
        output["parameters"] = Request.parameters
        if self.type == OutputType.ERROR:
            output["result"] = self.error
        elif self.type == OutputType.INFO:
            output["result"] = self.information
        elif self.type == OutputType.SUCCESS:
            output["result"] = self.success

        if self.description is not None:
            output["description"] = self.description
        output["results"] = self.details if self.details is not None else {}
        output["artifact_version"] = Request.artifact_version

        return output

    def _set(self, output_type:OutputType, text_key:str, template_values:dict, details, rows:list, columns:list):

        if template_values is None:
            template_values = {}

        self.type = output_type
        self.description = self.texts.render(text_key, template_values | {"request": Request.get()}, Request.format)
        self.details = details
        self.rows = rows if rows is not None else []
        self.columns = columns if columns is not None else (list(self.rows[0].keys()) if len(self.rows) > 0 else [])

    def setInformation(self, text_key:str, template_values:dict, details = None, rows:list = None, columns:list = None):
        """ An Information output, the command ran but the outcome needs attention e.g. a verification mismatch """
        self._set(OutputType.INFO, text_key, template_values, details, rows, columns)

    def setSuccess(self, text_key:str, template_values:dict, details = None, rows:list = None, columns:list = None):
        self._set(OutputType.SUCCESS, text_key, template_values, details, rows, columns)

    def setError(self, text_key:str, template_values:dict, details = None):
        self._set(OutputType.ERROR, text_key, template_values, details, None, None)

    def getResult(self) -> OutputType:
        """ Returns an OutputType enum """
        return self.type

    def getDescription(self):
        return self.description

    def getDetails(self):
        """ Returns the results payload """
        return self.details

    def getRows(self):
        return self.rows

    def __getstate__(self):
        """ Used by jsonpickle to state of class to output """
        return self._get_state()

    def tojson(self):
        return jsonpickle.encode(self, unpicklable=False, indent=2)

    def toyaml(self):
        return load_yaml.class_to_yaml_str(self._get_state())

    def tocsv(self):
        """ RFC-4180 style: header row then one record per row, CRLF line endings """

        with io.StringIO() as buf:
            writer = csv.DictWriter(buf, fieldnames=self.columns, extrasaction="ignore", lineterminator="\r\n")
            writer.writeheader()
            for row in self.rows:
                writer.writerow({column:_cell(row.get(column)) for column in self.columns})
            return buf.getvalue()

    def totext(self):

        lines = []
        if self.description is not None:
            lines.append(self.description)
        if len(self.rows) > 0:
            table = [[str(column) for column in self.columns]]
            for row in self.rows:
                table.append([_cell(row.get(column)) for column in self.columns])
            widths = [max(len(line[index]) for line in table) for index in range(len(self.columns))]
            for line in table:
                lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
        return "\n".join(lines)

    def getContent(self, output_format:str = None):

        if output_format is None:
            output_format = Request.format

        if output_format == "json":
            return ("application/json", self.tojson())
        if output_format == "yaml":
            return ("text/yaml", self.toyaml())
        if output_format == "csv":
            return ("text/csv", self.tocsv())

        return ("text/plain", self.totext())

def _cell(value) -> str:

    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
