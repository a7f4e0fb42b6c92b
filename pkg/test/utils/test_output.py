#!/usr/bin/env python3

import json
import pytest
from utils.output import FormatOutput, OutputType
from utils.request import Request
from utils.texts import Texts

@pytest.fixture(autouse=True)
def request_parameters():

    Request.set({"command": "coeffs", "format": "text", "selector": "motzkin", "n_range": None}, "0.1.0")

@pytest.fixture
def texts_file(tmp_path):

    path = tmp_path.joinpath("sample_texts.yaml")
    path.write_text('---\noutput-texts:\n  default:\n    sample.success: "{{ count }} rows"\n    '
                    'sample.short:\n      default: "long form"\n      csv: "short form"\n')
    return str(path)

def test_request_drops_unset():

    assert Request.parameters == {"selector": "motzkin"}
    assert Request.get()["format"] == "text"

def test_unknown_format_falls_back():

    Request.set({"command": "table", "format": "xml"})

    assert Request.format == "text"

def test_success_json(texts_file):

    output = FormatOutput({"template-text-file": texts_file})
    output.setSuccess("sample.success", {"count": 2}, {"values": ["1", "2"]}, [{"n": 1, "v": True}, {"n": 2, "v": None}])

    record = json.loads(output.tojson())

    assert output.getResult() == OutputType.SUCCESS
    assert record == {"command": "coeffs", "parameters": {"selector": "motzkin"}, "result": "Success",
                      "description": "2 rows", "results": {"values": ["1", "2"]}, "artifact_version": "0.1.0"}

def test_csv_and_text(texts_file):

    output = FormatOutput({"template-text-file": [texts_file]})
    output.setSuccess("sample.success", {"count": 2}, {}, [{"n": 1, "v": True}, {"n": 22, "v": None}], ["n", "v"])

    assert output.tocsv() == "n,v\r\n1,true\r\n22,\r\n"
    assert output.totext().splitlines() == ["2 rows", "n   v", "1   true", "22"]

def test_missing_text_key():

    output = FormatOutput()
    output.setError("no.such-key", {})

    assert output.getResult() == OutputType.ERROR
    assert "no.such-key" in output.getDescription()

def test_format_variants(texts_file):

    texts = Texts.from_files(texts_file)

    assert texts.render("sample.short") == "long form"
    assert texts.render("sample.short", output_format="csv") == "short form"
    assert texts.has("sample.success")

def test_yaml(texts_file):

    output = FormatOutput({"template-text-file": texts_file})
    output.setInformation("sample.success", {"count": 0})

    assert "result: Information" in output.toyaml()
