#!/usr/bin/env python3
"""
Renders exact rationals as fixed-point decimal strings.

Interval endpoints are rendered with directed rounding (lower toward -inf, upper toward +inf) so the
printed interval always contains the exact one.  Single values use round-half-even.
"""

from enum import Enum
from fractions import Fraction
import math
import gmpy2

class Rounding(Enum):
    FLOOR = "floor"
    CEILING = "ceiling"
    HALF_EVEN = "half-even"

    def __repr__(self):
        return self.name

def _digits(n:int) -> str:
    """ Base-10 digits of an integer of any length, independent of the interpreter's int-to-str digit limit """
    return gmpy2.mpz(n).digits(10)

def _scaled(value:Fraction, digits:int, rounding:Rounding) -> int:

    scaled = Fraction(value) * 10**digits
    if rounding == Rounding.FLOOR:
        return math.floor(scaled)
    if rounding == Rounding.CEILING:
        return math.ceil(scaled)
    # Fraction.__round__ with no ndigits rounds half to even
    return round(scaled)

def render(value:Fraction, digits:int, rounding:Rounding = Rounding.HALF_EVEN) -> str:
    """ Renders 'value' with exactly 'digits' decimal places """

    if digits < 0:
        raise ValueError(f"digits must be a natural number (was {digits})")

    scaled = _scaled(value, digits, rounding)
    sign = "-" if scaled < 0 else ""
    integer_part, fraction_part = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{_digits(integer_part)}"
    return f"{sign}{_digits(integer_part)}.{_digits(fraction_part).zfill(digits)}"

def render_exact(value:Fraction) -> str:
    """ 'numerator/denominator', integers render without the '/1' """

    value = Fraction(value)
    if value.denominator == 1:
        return _digits(value.numerator)
    return f"{_digits(value.numerator)}/{_digits(value.denominator)}"

def rational_record(value:Fraction, digits:int, rounding:Rounding = Rounding.HALF_EVEN) -> dict:
    """ The exact and decimal forms of a rational, as it appears in command output """

    return {
        "exact": render_exact(value),
        "decimal": render(value, digits, rounding),
        "digits": digits,
    }

def significant_digits_agree(first:str, second:str, significant:int) -> bool:
    """ True when two decimal strings round to the same value at 'significant' significant digits """

    def _round_significant(text:str) -> Fraction:
        value = Fraction(text)
        if value == 0:
            return value
        exponent = math.floor(math.log10(abs(value)))
        # log10 of a Fraction goes through float, correct the exponent exactly
        while abs(value) >= Fraction(10)**(exponent + 1):
            exponent += 1
        while abs(value) < Fraction(10)**exponent:
            exponent -= 1
        quantum = Fraction(10)**(exponent - significant + 1)
        return round(value / quantum) * quantum

    return _round_significant(first) == _round_significant(second)
