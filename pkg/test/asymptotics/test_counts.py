#!/usr/bin/env python3

import pytest
from fractions import Fraction
import mpmath
from asymptotics.counts import (leaf_count_asymptotic, vertex_count_asymptotic, asymptotic_leaf_ratio, balanced_root_bound_check,
                                exact_vertex_proportion, expected_rank_estimate, protected_deviation)
from asymptotics.sequences import protected_probability_sequence
from utils.error import UsageError

def test_asymptotic_values_positive():

    assert leaf_count_asymptotic(100) > 0
    assert mpmath.isfinite(vertex_count_asymptotic(11))
    assert vertex_count_asymptotic(11) > 0

def test_asymptotic_ratio():

    assert abs(asymptotic_leaf_ratio(10**6) - mpmath.mpf(1) / 3) < 1e-4
    assert abs(asymptotic_leaf_ratio(10**6) - mpmath.mpf(1) / 3) < abs(asymptotic_leaf_ratio(10**3) - mpmath.mpf(1) / 3)

def test_asymptotic_size_guard():

    with pytest.raises(UsageError):
        leaf_count_asymptotic(0)

def test_balanced_root_bound():

    report = balanced_root_bound_check(60)

    assert report.holds
    assert report.first_violation is None
    assert report.base == Fraction(29, 10)
    assert report.counts[:4] == [1, 1, 2, 2]
    assert report.rows()[2] == {"n": 3, "b": 2, "b_n_squared": 18, "bound": Fraction(24389, 1000)}

def test_exact_leaf_proportion():

    assert exact_vertex_proportion("leaf", 3) == Fraction(1, 2)
    assert abs(exact_vertex_proportion("leaf", 5000) - Fraction(1, 3)) < Fraction(1, 1000)

def test_exact_proportions_small():

    # n = 4: 16 vertices, 9 of them 1-protected, 14 balanced, 4 balanced of rank 1
    assert exact_vertex_proportion("protected", 4, 1) == Fraction(9, 16)
    assert exact_vertex_proportion("balanced", 4) == Fraction(14, 16)
    assert exact_vertex_proportion("balanced-rank", 4, 1) == Fraction(4, 16)

    with pytest.raises(UsageError):
        exact_vertex_proportion("purple", 4)

def test_expected_rank_estimate():

    assert expected_rank_estimate(3) == Fraction(4, 6)
    assert expected_rank_estimate(4) == Fraction(11, 14)

@pytest.mark.parametrize("k", [1, 2, 3])
def test_convergence_to_protected_probability(k):

    p = protected_probability_sequence(3)

    at_200 = protected_deviation(k, 200, p[k])
    at_50 = protected_deviation(k, 50, p[k])

    assert at_200 <= Fraction(2, 100)
    assert at_200 < at_50
