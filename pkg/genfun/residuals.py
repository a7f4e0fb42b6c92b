#!/usr/bin/env python3
"""
Functional-equation residuals.  Each one is a series that must be identically zero to the truncation order.
"""

import logging
from series.truncated import TruncatedSeries
from genfun.motzkin import check_order, motzkin_series, leaves_series
from genfun.protected import protected_root_series, sqrt_pair

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

def motzkin_residual(order:int) -> TruncatedSeries:
    """ M - x - xM - xM^2 """

    M = motzkin_series(order)
    return M - TruncatedSeries.x(order) - (M + M * M).shift_up(1)

def leaves_residual(order:int) -> TruncatedSeries:
    """ L - x - xL - 2xLM """

    L = leaves_series(order)
    M = motzkin_series(order)
    return L - TruncatedSeries.x(order) - (L + (L * M).scale(2)).shift_up(1)

def protected_root_residual(k:int, order:int) -> TruncatedSeries:
    """ R_k - xR_{k-1} - xR_{k-1}^2, for k >= 1 """

    R = protected_root_series(k, order)
    previous = protected_root_series(k - 1, order)
    return R - (previous + previous * previous).shift_up(1)

def pair_residual(k:int, order:int) -> TruncatedSeries:
    """ U_k + V_k sqrt(1 - 2x - 3x^2) - 2x R_k """

    pair = sqrt_pair(k)
    return pair.numerator(order) - protected_root_series(k, order).shift_up(1).scale(2)

def residuals(order:int, k_max:int) -> dict:
    """ Every residual, keyed by a name such as 'motzkin' or 'protected-root:2' """

    check_order(order)

    out = {
        "motzkin": motzkin_residual(order),
        "leaves": leaves_residual(order),
    }
    for k in range(1, k_max + 1):
        out[f"protected-root:{k}"] = protected_root_residual(k, order)
    for k in range(0, k_max + 1):
        out[f"pair:{k}"] = pair_residual(k, order)
    return out

def vanishes(residual:TruncatedSeries) -> bool:
    return all(coeff == 0 for coeff in residual.coeffs)
