#!/usr/bin/env python3

import pytest
from series.truncated import TruncatedSeries
from genfun.motzkin import motzkin_series, motzkin_closed_form, leaves_series, motzkin_number, leaf_count, inv_sqrt_delta
from utils.error import UsageError

def test_motzkin_coefficients():

    M = motzkin_series(10)

    assert M.coeffs[:11] == (0, 1, 1, 2, 4, 9, 21, 51, 127, 323, 835)

def test_motzkin_integral():

    assert motzkin_series(40).integers() is not None

@pytest.mark.parametrize("order", [1, 6, 50, 500])
def test_closed_form_matches_peeling(order):

    assert motzkin_closed_form(order) == motzkin_series(order)

def test_closed_form_values():

    closed = motzkin_closed_form(6)

    assert closed[1] == 1
    assert closed[4] == 4
    assert closed[6] == 21

def test_leaves_coefficients():

    L = leaves_series(6)

    assert L.coeffs == (0, 1, 1, 3, 7, 19, 51)

def test_leaves_functional_equation():

    L = leaves_series(30)
    M = motzkin_series(30)

    assert L == TruncatedSeries.x(30) + (L + (L * M).scale(2)).shift_up(1)

def test_central_trinomial():

    assert inv_sqrt_delta(6).coeffs == (1, 1, 3, 7, 19, 51, 141)

def test_recurrences_match_series():

    M = motzkin_series(200)
    L = leaves_series(200)

    for n in range(1, 201):
        assert motzkin_number(n) == M[n]
        assert leaf_count(n) == L[n]

def test_leaf_proportion_large_n():

    n = 5000
    ratio = leaf_count(n) / (n * motzkin_number(n))

    assert abs(ratio - 1 / 3) < 1e-3

@pytest.mark.parametrize("order", [0, -3])
def test_bad_order(order):

    with pytest.raises(UsageError):
        motzkin_series(order)
