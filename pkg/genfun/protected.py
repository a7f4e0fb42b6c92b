#!/usr/bin/env python3
"""
Trees with a k-protected root R_k(x), k-protected vertices P_k(x), and the pair form
2x R_k = U_k + V_k sqrt(1 - 2x - 3x^2) in which U_k, V_k are polynomials
"""

import logging
from functools import lru_cache
from series.polynomial import Polynomial, ONE, X
from series.truncated import TruncatedSeries
from genfun.genfun_config import cache_size
from genfun.motzkin import DELTA, check_level, check_order, motzkin_series, inv_sqrt_delta, sqrt_delta, divide_by_2x
from utils.error import GenfunError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

@lru_cache(maxsize=cache_size())
def protected_root_series(k:int, order:int) -> TruncatedSeries:
    """ R_0 = M since every root is 0-protected, then R_k = xR_{k-1} + xR_{k-1}^2 """

    check_level(k)
    check_order(order)

    if k == 0:
        return motzkin_series(order)
    previous = protected_root_series(k - 1, order)
    return (previous + previous * previous).shift_up(1)

def protected_series(k:int, order:int) -> TruncatedSeries:
    """ P_k = R_k/sqrt(1 - 2x - 3x^2), [x^n]P_k counts k-protected vertices over all trees of size n """

    return protected_root_series(k, order) * inv_sqrt_delta(order)

class SqrtPair:
    """ U, V with 2x R_level = U + V sqrt(1 - 2x - 3x^2) """

    def __init__(self, U:Polynomial, V:Polynomial, level:int):
        self.U = U
        self.V = V
        self.level = level

    def numerator(self, order:int) -> TruncatedSeries:
        """ U + V sqrt(1 - 2x - 3x^2) to the given order """
        return TruncatedSeries.from_polynomial(self.U, order) + TruncatedSeries.from_polynomial(self.V, order) * sqrt_delta(order)

    def reconstruct(self, order:int) -> TruncatedSeries:
        """ R_level to the given order, recovered from the pair """
        return divide_by_2x(self.numerator(order + 1), f"U_{self.level} + V_{self.level} sqrt(1 - 2x - 3x^2)")

    def __eq__(self, other):
        if not isinstance(other, SqrtPair):
            return NotImplemented
        return (self.U, self.V, self.level) == (other.U, other.V, other.level)

    def __repr__(self):
        return f"SqrtPair(level={self.level}, U={self.U}, V={self.V})"

def _exact_half(p:Polynomial, level:int) -> Polynomial:

    integers = [coeff.numerator for coeff in p.coeffs] if p.is_integral() else None
    if integers is None or any(coeff % 2 for coeff in integers):
        logger.error(f"Pair recurrence at level {level} produced a polynomial with odd or non-integral coefficients")
        raise GenfunError("genfun.inexact-halving", {"level":level})
    return Polynomial(coeff // 2 for coeff in integers)

@lru_cache(maxsize=cache_size())
def sqrt_pair(k:int) -> SqrtPair:
    """ U_0 = 1 - x, V_0 = -1 from the closed form of M, then
        U_{k+1} = xU_k + (U_k^2 + V_k^2 (1 - 2x - 3x^2))/2 and V_{k+1} = xV_k + U_k V_k
    """

    check_level(k)

    if k == 0:
        return SqrtPair(ONE - X, -ONE, 0)

    previous = sqrt_pair(k - 1)
    U, V = previous.U, previous.V
    logger.debug(f"Pair level {k}, deg U_{k - 1} = {U.degree}")
    next_U = U.shift(1) + _exact_half(U * U + V * V * DELTA, k)
    next_V = V.shift(1) + U * V
    return SqrtPair(next_U, next_V, k)
