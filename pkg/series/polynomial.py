#!/usr/bin/env python3
"""
Exact polynomials with rational coefficients
"""

import logging
from fractions import Fraction
from typing import Iterable
import gmpy2

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

def _integers(coeffs) -> list:
    """ The coefficients as ints when they are all integral, else None """

    if all(coeff.denominator == 1 for coeff in coeffs):
        return [coeff.numerator for coeff in coeffs]
    return None

def _product(left:list, right:list, limit:int = None) -> list:
    """ Schoolbook product of coefficient lists, optionally truncated after exponent 'limit' """

    length = len(left) + len(right) - 1
    if limit is not None:
        length = min(length, limit + 1)
    out = [0] * length
    for i, left_coeff in enumerate(left):
        if not left_coeff or i >= length:
            continue
        for j in range(min(len(right), length - i)):
            out[i + j] += left_coeff * right[j]
    return out

KRONECKER_THRESHOLD = 64

def _kronecker_product(left:list, right:list) -> list:
    """ Product of integer coefficient lists by packing each into one big integer, one slot per coefficient.

    Slots are whole bytes wide so packing and unpacking are single to_bytes/from_bytes passes.
    """

    length = len(left) + len(right) - 1
    bound = max(map(abs, left)) * max(map(abs, right)) * min(len(left), len(right))
    width = (bound.bit_length() + 2 + 7) // 8
    half = 1 << (8 * width - 1)

    def _pack(coeffs:list):
        positive = b"".join(max(coeff, 0).to_bytes(width, "little") for coeff in coeffs)
        negative = b"".join(max(-coeff, 0).to_bytes(width, "little") for coeff in coeffs)
        return gmpy2.mpz(int.from_bytes(positive, "little") - int.from_bytes(negative, "little"))

    # Biasing every slot by 'half' keeps each slot non-negative so no borrows cross slot boundaries
    bias = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * length, "little")
    packed = int(_pack(left) * _pack(right)) + bias
    raw = packed.to_bytes(width * length, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") - half for i in range(length)]

class Polynomial:
    """ coeffs[i] is the coefficient of x^i.  Trailing zeros are stripped, the zero polynomial has no coefficients. """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs:Iterable = ()):

        coeffs = [Fraction(coeff) for coeff in coeffs]
        while len(coeffs) > 0 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, exponent:int, coefficient = 1) -> "Polynomial":
        return cls([0] * exponent + [coefficient])

    @property
    def degree(self) -> int:
        """ -1 for the zero polynomial """
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def lowest_exponent(self) -> int:
        """ The exponent of the lowest non-zero term, None for the zero polynomial """

        for exponent, coeff in enumerate(self.coeffs):
            if coeff != 0:
                return exponent
        return None

    def coefficient(self, exponent:int) -> Fraction:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return Fraction(0)

    def is_integral(self) -> bool:
        return _integers(self.coeffs) is not None

    def __add__(self, other:"Polynomial") -> "Polynomial":
        length = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coefficient(i) + other.coefficient(i) for i in range(length))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-coeff for coeff in self.coeffs)

    def __sub__(self, other:"Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other:"Polynomial") -> "Polynomial":

        if self.is_zero() or other.is_zero():
            return Polynomial()

        left, right = _integers(self.coeffs), _integers(other.coeffs)
        if left is not None and right is not None:
            if min(len(left), len(right)) >= KRONECKER_THRESHOLD:
                return Polynomial(_kronecker_product(left, right))
            return Polynomial(_product(left, right))
        return Polynomial(_product(list(self.coeffs), list(other.coeffs)))

    def scale(self, factor) -> "Polynomial":
        factor = Fraction(factor)
        return Polynomial(coeff * factor for coeff in self.coeffs)

    def shift(self, exponent:int) -> "Polynomial":
        """ Multiply by x^exponent """

        if self.is_zero():
            return self
        return Polynomial([0] * exponent + list(self.coeffs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, point) -> Fraction:
        return eval_poly(self, point)

    def __repr__(self):

        if self.is_zero():
            return "Polynomial(0)"
        terms = []
        for exponent, coeff in enumerate(self.coeffs):
            if coeff == 0:
                continue
            terms.append(f"{coeff}" if exponent == 0 else f"{coeff}*x^{exponent}")
        return "Polynomial(" + " + ".join(terms) + ")"

def eval_poly(p:Polynomial, q) -> Fraction:
    """ Exact value p(q), by Horner's rule """

    q = Fraction(q)
    if p.is_zero():
        return Fraction(0)

    if (integers := _integers(p.coeffs)) is not None:
        # Homogeneous Horner in integers: p(a/b) = (sum c_i a^i b^(d-i)) / b^d, one normalisation at the end
        numerator = integers[-1]
        power = 1
        for coeff in reversed(integers[:-1]):
            power *= q.denominator
            numerator = numerator * q.numerator + coeff * power
        return Fraction(numerator, power)

    value = Fraction(0)
    for coeff in reversed(p.coeffs):
        value = value * q + coeff
    return value

X = Polynomial([0, 1])
ONE = Polynomial([1])
