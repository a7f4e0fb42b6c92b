#!/usr/bin/env python3

import json
import pytest
from pathlib import Path
from actions import actions_config
from actions.handler import handle
from utils.config import ConfigBase

@pytest.fixture
def run_json():
    """ Runs a command through the handler with json output, returns (exit code, parsed record) """

    def _run(command:str, **parameters):
        exit_code, body = handle({"command": command, "format": "json"} | parameters)
        return exit_code, json.loads(body)

    return _run

@pytest.fixture
def run_format():
    """ Runs a command through the handler, returns (exit code, rendered body) """

    def _run(command:str, output_format:str, **parameters):
        return handle({"command": command, "format": output_format} | parameters)

    return _run

@pytest.fixture(scope="session")
def output_record_schema():

    ConfigBase.init()
    schema_path = ConfigBase.getConfigPath(actions_config.config()["schema-file"])
    return json.loads(Path(schema_path).read_text())
