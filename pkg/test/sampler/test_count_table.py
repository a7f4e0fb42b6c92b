#!/usr/bin/env python3

import pytest
from sampler.count_table import CountTable, motzkin_count
from genfun.motzkin import motzkin_series
from utils.error import SamplerError

def test_first_counts():

    assert [motzkin_count(n) for n in range(1, 13)] == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798]

def test_counts_match_series():

    series = motzkin_series(200)

    for n in range(1, 201):
        assert motzkin_count(n) == series.coefficient(n)

def test_bad_size():

    with pytest.raises(SamplerError) as error:
        motzkin_count(0)

    assert error.value.text_key == "trees.size-too-small"

def test_split_prefix():

    table = CountTable()

    # size 5: left sizes 1, 2, 3 give 1*2, 1*1, 2*1 binary-root trees
    assert table.split_prefix(5) == [0, 2, 3, 5]
    assert table.split(5, 0) == (1, 0)
    assert table.split(5, 2) == (2, 0)
    assert table.split(5, 4) == (3, 1)
    assert table.split_offset(5, 3) == 3

def test_scan_agrees_with_prefix():

    cached = CountTable()
    scanning = CountTable(prefix_cache_limit=0)

    for n in range(3, 15):
        binary_count = cached.count(n) - cached.count(n - 1)
        for index in range(binary_count):
            assert scanning.split(n, index) == cached.split(n, index)
        for left_size in range(1, n - 1):
            assert scanning.split_offset(n, left_size) == cached.split_offset(n, left_size)

def test_scan_out_of_range():

    scanning = CountTable(prefix_cache_limit=0)

    with pytest.raises(SamplerError):
        scanning.split(5, 5)
