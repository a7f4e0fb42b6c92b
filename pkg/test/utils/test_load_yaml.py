#!/usr/bin/env python3

import pytest
import utils.load_yaml
from utils.error import ConfigError, MotzkinwareError, ErrorCategory

def test_no_file():
    with pytest.raises(ConfigError) as error:
        utils.load_yaml.yaml_file_to_dict("")

    assert error.value.text_key == "config.missing-file"
    assert isinstance(error.value, MotzkinwareError)
    assert error.value.category == ErrorCategory.INTERNAL

def test_config_section(tmp_path):

    path = tmp_path.joinpath("sample_config.yaml")
    path.write_text("---\nsample-config:\n  workers: 3\n")

    assert utils.load_yaml.config_section(str(path), "sample-config") == {"workers": 3}
    assert utils.load_yaml.config_section(str(path), "other-config") == {}

def test_yaml_str():

    assert utils.load_yaml.yaml_str_to_dict("") == {}
    assert utils.load_yaml.yaml_str_to_dict("a: [1, 2]") == {"a": [1, 2]}
