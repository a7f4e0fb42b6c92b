#!/usr/bin/env python3
"""
Balanced vertices.  B_k(x) counts trees whose root is balanced of rank k (a polynomial, every leaf sits at depth
exactly k), B_k^* = B_k/sqrt(1 - 2x - 3x^2) counts balanced rank-k vertices over all trees.
"""

import logging
from functools import lru_cache
from series.polynomial import Polynomial, X
from series.truncated import TruncatedSeries
from genfun.genfun_config import cache_size
from genfun.motzkin import check_level, check_order, inv_sqrt_delta

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

@lru_cache(maxsize=cache_size())
def balanced_poly(k:int) -> Polynomial:
    """ B_0 = x, B_k = xB_{k-1} + xB_{k-1}^2.  Lowest term x^(k+1), degree 2^(k+1) - 1. """

    check_level(k)

    if k == 0:
        return X
    previous = balanced_poly(k - 1)
    return (previous + previous * previous).shift(1)

def balanced_root_levels(order:int) -> list:
    """ B_0 ... B_{order-1} truncated at 'order'.  Higher levels start at x^(k+1) with k+1 > order so contribute nothing. """

    check_order(order)

    levels = [TruncatedSeries.x(order)]
    for _ in range(1, order):
        previous = levels[-1]
        levels.append((previous + previous * previous).shift_up(1))
    return levels

@lru_cache(maxsize=cache_size())
def _balanced_root_levels(order:int) -> tuple:
    return tuple(balanced_root_levels(order))

def balanced_root_truncated(k:int, order:int) -> TruncatedSeries:

    check_level(k)
    check_order(order)

    if k >= order:
        return TruncatedSeries.zero(order)
    return _balanced_root_levels(order)[k]

def balanced_series(k:int, order:int) -> TruncatedSeries:
    """ B_k^* truncated at 'order' """
    return balanced_root_truncated(k, order) * inv_sqrt_delta(order)

@lru_cache(maxsize=cache_size())
def balanced_root_series(order:int) -> TruncatedSeries:
    """ The sum of all B_k, [x^n] is b(n) the number of trees of size n whose root is balanced """

    total = TruncatedSeries.zero(order)
    for level in _balanced_root_levels(order):
        total = total + level
    return total

def balanced_total_series(order:int) -> TruncatedSeries:
    """ B^* = sum of all B_k^*, [x^n] counts balanced vertices over all trees of size n """
    return balanced_root_series(order) * inv_sqrt_delta(order)

def eb_series(order:int) -> TruncatedSeries:
    """ EB = sum of k B_k^*, [x^n] is the total rank of balanced vertices over all trees of size n """

    total = TruncatedSeries.zero(order)
    for k, level in enumerate(_balanced_root_levels(order)):
        if k > 0:
            total = total + level.scale(k)
    return total * inv_sqrt_delta(order)

def balanced_root_count(n:int) -> int:
    """ b(n) """

    check_order(n)
    return int(balanced_root_series(n).coefficient(n))
