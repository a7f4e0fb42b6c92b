#!/usr/bin/env python3

import math
import sys
from fractions import Fraction
import pytest
import actions.verify
from actions.handler import handle, main, COMMANDS
from actions.verify import Check
from utils.error import GenfunError

def _assert_record(record, schema):

    for key in schema["required"]:
        assert key in record
    assert record["result"] in schema["properties"]["result"]["enum"]
    assert isinstance(record["results"], dict)

def test_table(run_json, output_record_schema):

    exit_code, record = run_json("table", max_k=6, digits=8)

    assert exit_code == 0
    _assert_record(record, output_record_schema)
    assert record["command"] == "table"
    assert record["result"] == "Success"
    assert [level["probability"]["decimal"] for level in record["results"]["levels"]] == [
        "0.66666667", "0.37037037", "0.16918153", "0.06593464", "0.02342734", "0.00799206"]
    assert record["results"]["levels"][1]["probability"]["exact"] == "10/27"

def test_table_text(run_format):

    exit_code, body = run_format("table", "text", max_k=2)
    lines = body.splitlines()

    assert exit_code == 0
    assert lines[1].split() == ["k", "exact", "decimal"]
    assert lines[2].split() == ["1", "2/3", "0.66666667"]

def test_table_highest_levels(run_json):

    exit_code, record = run_json("table", max_k=16)
    levels = record["results"]["levels"]

    assert exit_code == 0
    assert len(levels) == 16
    # p_16 has denominator 3^65535
    assert len(levels[15]["probability"]["exact"].split("/")[1]) == math.floor(65535 * math.log10(3)) + 1
    assert levels[15]["probability"]["decimal"] == "0.00000014"

def test_table_bad_max_k(run_json):

    exit_code, record = run_json("table", max_k=0)

    assert exit_code == 2
    assert record["result"] == "Error"

def test_negative_digits(run_json):

    exit_code, record = run_json("table", digits=-1)

    assert exit_code == 2
    assert "natural number" in record["description"]

def test_coeffs(run_json, output_record_schema):

    exit_code, record = run_json("coeffs", selector="motzkin", n_range="1..6")

    assert exit_code == 0
    _assert_record(record, output_record_schema)
    assert [entry["coefficient"] for entry in record["results"]["coefficients"]] == ["1", "1", "2", "4", "9", "21"]

def test_coeffs_csv(run_format):

    exit_code, body = run_format("coeffs", "csv", selector="balanced", n_range="2..4")

    assert exit_code == 0
    assert body.splitlines() == ["n,coefficient", "2,2", "3,6", "4,14"]

def test_coeffs_level_selector(run_json):

    exit_code, record = run_json("coeffs", selector="protected:1", n_range="4")

    assert exit_code == 0
    assert record["results"]["coefficients"] == [{"n": 4, "coefficient": "9"}]

@pytest.mark.parametrize("parameters, text_key_fragment", [
    ({"selector": "purple"}, "Unknown generating function"),
    ({"selector": "protected:x"}, "Unknown generating function"),
    ({"selector": "motzkin", "n_range": "5..2"}, "not a valid size range"),
    ({"selector": "motzkin", "n_range": "1..5000"}, "limited to"),
])
def test_coeffs_usage_errors(run_json, parameters, text_key_fragment):

    exit_code, record = run_json("coeffs", **parameters)

    assert exit_code == 2
    assert record["result"] == "Error"
    assert text_key_fragment in record["description"]

def test_verify(run_json):

    exit_code, record = run_json("verify", max_n=3, max_k=2)

    assert exit_code == 0
    assert record["result"] == "Success"
    assert all(check["pass"] for check in record["results"]["checks"])

def test_verify_too_large(run_json):

    exit_code, record = run_json("verify", max_n=20)

    assert exit_code == 2
    assert "sample" in record["description"]

def test_verify_mismatch_exit_code(run_json, monkeypatch):

    monkeypatch.setattr(actions.verify, "run_checks", lambda max_n, max_k, workers=None: [Check(2, "leaves", 3, 2)])

    exit_code, record = run_json("verify", max_n=2, max_k=0)

    assert exit_code == 3
    assert record["result"] == "Information"

def test_bounds(run_json, output_record_schema):

    exit_code, record = run_json("bounds", cutoff=20, digits=18)

    assert exit_code == 0
    _assert_record(record, output_record_schema)
    results = record["results"]
    assert results["lower"]["decimal"] == "0.568362259762727778"
    assert results["upper"]["decimal"] == "0.568362259762727779"
    assert results["reference"]["contained"] is True
    assert results["reference"]["cutoff"] == 200

@pytest.mark.parametrize("command", ["bounds", "expected-rank"])
def test_bounds_csv(run_format, command):

    exit_code, body = run_format(command, "csv", cutoff=10, digits=12)
    lines = body.splitlines()

    assert exit_code == 0
    assert lines[0] == "lower,upper"
    lower, upper = lines[1].split(",")
    assert float(lower) <= float(upper)

def test_expected_rank(run_json):

    exit_code, record = run_json("expected-rank", cutoff=20, digits=16)

    assert exit_code == 0
    assert record["results"]["lower"]["decimal"].startswith("0.646484730196")
    assert record["results"]["upper"]["decimal"].startswith("0.646484730196")

def test_expected_rank_bad_cutoff(run_json):

    exit_code, _ = run_json("expected-rank", cutoff=0)

    assert exit_code == 2

def test_sample(run_json, output_record_schema):

    parameters = {"n": 12, "statistic": "leaf", "samples": 300, "seed": 17}
    exit_code, record = run_json("sample", **parameters)
    _, again = run_json("sample", **parameters)

    assert exit_code == 0
    _assert_record(record, output_record_schema)
    assert record["results"] == again["results"]
    assert record["results"]["reference"]["exact"] == "8551/23192"
    assert set(record["results"]["estimate"]) == {"exact", "decimal", "digits"}
    assert Fraction(record["results"]["estimate"]["exact"]) == Fraction(record["results"]["hits"], 300)
    assert "within_3_standard_errors" in record["results"]

def test_sample_needs_seed(run_json):

    exit_code, record = run_json("sample", n=12, statistic="leaf")

    assert exit_code == 2
    assert "--seed" in record["description"]

def test_sample_unknown_statistic(run_json):

    exit_code, _ = run_json("sample", n=12, statistic="purple", seed=1)

    assert exit_code == 2

def test_missing_command():

    exit_code, body = handle({})

    assert exit_code == 2
    assert "mandatory" in body

def test_unknown_command():

    exit_code, body = handle({"command": "draw"})

    assert exit_code == 2
    assert all(command in body for command in COMMANDS)

def test_internal_error(run_json, monkeypatch):

    def broken(*args, **kwargs):
        raise RuntimeError("broken")

    monkeypatch.setattr(actions.verify, "run_checks", broken)

    exit_code, record = run_json("verify", max_n=2, max_k=0)

    assert exit_code == 1
    assert record["result"] == "Error"

def test_library_error_is_internal(run_json, monkeypatch):

    def inexact(*args, **kwargs):
        raise GenfunError("genfun.inexact-halving", {"level": 3})

    monkeypatch.setattr(actions.verify, "run_checks", inexact)

    exit_code, record = run_json("verify", max_n=2, max_k=0)

    assert exit_code == 1
    assert record["result"] == "Error"
    assert record["description"] == "Algebra violation, halving the pair polynomials at level 3 left a remainder"

def test_main(monkeypatch, capsys):

    monkeypatch.setattr(sys, "argv", ["motzkinware", "coeffs", "motzkin", "--n-range", "1..6", "--format", "csv"])

    exit_code = main()

    assert exit_code == 0
    out = capsys.readouterr().out
    assert out.splitlines() == ["n,coefficient", "1,1", "2,1", "3,2", "4,4", "5,9", "6,21"]
    assert out.endswith("6,21\r\n")

def test_main_expected_rank(monkeypatch, capsys):

    monkeypatch.setattr(sys, "argv", ["motzkinware", "expected-rank", "--cutoff", "5", "--format", "csv"])

    assert main() == 0
    assert capsys.readouterr().out.splitlines()[0] == "lower,upper"
