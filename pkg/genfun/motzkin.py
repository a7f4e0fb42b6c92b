#!/usr/bin/env python3
"""
The radicand 1 - 2x - 3x^2, all Motzkin trees M(x) and their leaves L(x)
"""

import logging
from functools import lru_cache
from series.polynomial import Polynomial, ONE, X
from series.truncated import TruncatedSeries, sqrt, inv
from genfun.genfun_config import cache_size
from utils.error import GenfunError, UsageError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

DELTA = Polynomial([1, -2, -3])

def check_order(order:int):

    if order < 1:
        logger.error(f"Truncation order {order} is less than 1")
        raise UsageError("genfun.bad-order", {"order":order})

def check_level(level:int):

    if level < 0:
        logger.error(f"Level {level} is negative")
        raise UsageError("genfun.negative-level", {"level":level})

def delta(order:int) -> TruncatedSeries:
    return TruncatedSeries.from_polynomial(DELTA, order)

@lru_cache(maxsize=cache_size())
def sqrt_delta(order:int) -> TruncatedSeries:
    return sqrt(delta(order))

@lru_cache(maxsize=cache_size())
def inv_sqrt_delta(order:int) -> TruncatedSeries:
    """ 1/sqrt(1 - 2x - 3x^2), the central trinomial coefficients """
    return inv(sqrt_delta(order))

def divide_by_2x(numerator:TruncatedSeries, name:str) -> TruncatedSeries:
    """ numerator/(2x), after checking the constant term vanishes.  The result is known to one order less. """

    if numerator.coeffs[0] != 0:
        logger.error(f"Constant term of {name} is {numerator.coeffs[0]}, cannot divide by 2x")
        raise GenfunError("genfun.low-coefficient", {"exponent":0, "series":name, "coefficient":str(numerator.coeffs[0])})
    return numerator.shift_down(1).half()

@lru_cache(maxsize=cache_size())
def motzkin_series(order:int) -> TruncatedSeries:
    """ M = x + xM + xM^2, peeled one coefficient at a time: [x^n]M only needs [x^m]M for m < n """

    check_order(order)

    coeffs = [0] * (order + 1)
    for n in range(1, order + 1):
        total = 1 if n == 1 else 0
        total += coeffs[n - 1]
        for i in range(1, n - 1):
            total += coeffs[i] * coeffs[n - 1 - i]
        coeffs[n] = total
    return TruncatedSeries(order, coeffs)

def motzkin_closed_form(order:int) -> TruncatedSeries:
    """ M = (1 - x - sqrt(1 - 2x - 3x^2))/(2x) """

    check_order(order)

    numerator = TruncatedSeries.from_polynomial(ONE - X, order + 1) - sqrt_delta(order + 1)
    if numerator.coeffs[1] != 0:
        logger.error(f"Coefficient of x in 1 - x - sqrt(delta) is {numerator.coeffs[1]}")
        raise GenfunError("genfun.low-coefficient", {"exponent":1, "series":"1 - x - sqrt(1 - 2x - 3x^2)", "coefficient":str(numerator.coeffs[1])})
    return divide_by_2x(numerator, "1 - x - sqrt(1 - 2x - 3x^2)")

@lru_cache(maxsize=cache_size())
def leaves_series(order:int) -> TruncatedSeries:
    """ L = x/sqrt(1 - 2x - 3x^2), [x^n]L is the number of leaves over all trees of size n """

    check_order(order)
    return inv_sqrt_delta(order).shift_up(1)

def motzkin_number(n:int) -> int:
    """ t_n = [x^n]M by the three-term recurrence of the Motzkin numbers, linear in n """

    check_order(n)

    # m_j counts trees with j+1 vertices: (j+2)m_j = (2j+1)m_{j-1} + 3(j-1)m_{j-2}
    previous, current = 1, 1
    for j in range(2, n):
        previous, current = current, ((2 * j + 1) * current + 3 * (j - 1) * previous) // (j + 2)
    return current

def leaf_count(n:int) -> int:
    """ [x^n]L, the central trinomial coefficient T_{n-1}: jT_j = (2j-1)T_{j-1} + 3(j-1)T_{j-2} """

    check_order(n)

    previous, current = 1, 1
    for j in range(2, n):
        previous, current = current, ((2 * j - 1) * current + 3 * (j - 1) * previous) // j
    return current
