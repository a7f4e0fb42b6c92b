#!/usr/bin/env python3
"""
Exact truncated formal power series over the rationals.

A series of order N carries the coefficients of x^0 ... x^N.  Ring operations require equal orders and return
the same order, truncation is never implicit.
"""

import logging
from fractions import Fraction
from typing import Iterable
from series.polynomial import Polynomial, _integers, _product
from utils.error import SeriesError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

class TruncatedSeries:

    __slots__ = ("order", "coeffs")

    def __init__(self, order:int, coeffs:Iterable = ()):

        if order < 0:
            raise SeriesError("series.negative-order", {"order":order})

        coeffs = [Fraction(coeff) for coeff in coeffs]
        if len(coeffs) > order + 1:
            coeffs = coeffs[:order + 1]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))

        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, order:int) -> "TruncatedSeries":
        return cls(order)

    @classmethod
    def one(cls, order:int) -> "TruncatedSeries":
        return cls(order, [1])

    @classmethod
    def x(cls, order:int) -> "TruncatedSeries":
        return cls(order, [0, 1])

    @classmethod
    def from_polynomial(cls, p:Polynomial, order:int) -> "TruncatedSeries":
        return cls(order, p.coeffs)

    def coefficient(self, exponent:int) -> Fraction:
        """ [x^exponent], which must be within the truncation order """

        if not 0 <= exponent <= self.order:
            raise SeriesError("series.coefficient-out-of-range", {"exponent":exponent, "order":self.order})
        return self.coeffs[exponent]

    def __getitem__(self, exponent:int) -> Fraction:
        return self.coefficient(exponent)

    def integers(self) -> list:
        """ The coefficients as ints, None when any coefficient is not integral """
        return _integers(self.coeffs)

    def truncate(self, order:int) -> "TruncatedSeries":
        """ The same series known to a lower order """

        if order > self.order:
            raise SeriesError("series.order-mismatch", {"left":self.order, "right":order})
        return TruncatedSeries(order, self.coeffs[:order + 1])

    def __add__(self, other:"TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other:"TruncatedSeries") -> "TruncatedSeries":
        return add(self, -other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, (-coeff for coeff in self.coeffs))

    def __mul__(self, other:"TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def scale(self, factor) -> "TruncatedSeries":
        factor = Fraction(factor)
        return TruncatedSeries(self.order, (coeff * factor for coeff in self.coeffs))

    def half(self) -> "TruncatedSeries":
        return self.scale(Fraction(1, 2))

    def shift_up(self, exponent:int = 1) -> "TruncatedSeries":
        """ Multiply by x^exponent, keeping the order """
        return TruncatedSeries(self.order, [0] * exponent + list(self.coeffs[:max(0, self.order + 1 - exponent)]))

    def shift_down(self, exponent:int = 1) -> "TruncatedSeries":
        """ Divide by x^exponent.  The low coefficients must vanish; the result is known to order - exponent. """

        for low_exponent in range(exponent):
            if self.coeffs[low_exponent] != 0:
                logger.error(f"Cannot divide by x^{exponent}, coefficient of x^{low_exponent} is {self.coeffs[low_exponent]}")
                raise SeriesError("series.shift-nonzero", {"shift":exponent, "exponent":low_exponent, "coefficient":str(self.coeffs[low_exponent])})
        return TruncatedSeries(self.order - exponent, self.coeffs[exponent:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        shown = ", ".join(str(coeff) for coeff in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries(order={self.order}, [{shown}{more}])"

def _check_orders(a:TruncatedSeries, b:TruncatedSeries):

    if a.order != b.order:
        logger.error(f"Series orders differ, {a.order} != {b.order}")
        raise SeriesError("series.order-mismatch", {"left":a.order, "right":b.order})

def add(a:TruncatedSeries, b:TruncatedSeries) -> TruncatedSeries:

    _check_orders(a, b)
    return TruncatedSeries(a.order, (left + right for left, right in zip(a.coeffs, b.coeffs)))

def mul(a:TruncatedSeries, b:TruncatedSeries) -> TruncatedSeries:
    """ Cauchy product truncated at the common order """

    _check_orders(a, b)

    left, right = a.integers(), b.integers()
    if left is not None and right is not None:
        return TruncatedSeries(a.order, _product(left, right, a.order))
    return TruncatedSeries(a.order, _product(list(a.coeffs), list(b.coeffs), a.order))

def inv(s:TruncatedSeries) -> TruncatedSeries:
    """ t with s*t = 1 to the truncation order """

    if s.coeffs[0] == 0:
        logger.error("Reciprocal of a series with zero constant term")
        raise SeriesError("series.zero-constant-term", {})

    coeffs = s.integers()
    if coeffs is not None and abs(coeffs[0]) == 1:
        # Unit constant term keeps everything integral
        unit = coeffs[0]
    else:
        coeffs = list(s.coeffs)
        unit = None

    inverse_constant = unit if unit is not None else 1 / coeffs[0]
    out = [inverse_constant]
    for n in range(1, s.order + 1):
        total = 0
        for i in range(1, n + 1):
            if coeffs[i]:
                total += coeffs[i] * out[n - i]
        out.append(-total * inverse_constant)

    return TruncatedSeries(s.order, out)

def sqrt(s:TruncatedSeries) -> TruncatedSeries:
    """ The principal square root (constant term 1) by matching coefficients of t^2 = s term by term """

    if s.coeffs[0] != 1:
        logger.error(f"Square root of a series with constant term {s.coeffs[0]}")
        raise SeriesError("series.sqrt-constant-term", {"constant":str(s.coeffs[0])})

    out = [Fraction(1)]
    for n in range(1, s.order + 1):
        # sum_{i=1}^{n-1} t_i t_{n-i}, folded around the middle
        total = 0
        for i in range(1, (n + 1) // 2):
            total += out[i] * out[n - i]
        total *= 2
        if n % 2 == 0:
            total += out[n // 2] ** 2
        out.append((s.coeffs[n] - total) / 2)

    return TruncatedSeries(s.order, out)
