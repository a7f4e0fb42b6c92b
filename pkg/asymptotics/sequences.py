#!/usr/bin/env python3
"""
Limiting probabilities that a vertex is k-protected (p_k) or balanced of rank k (b_k), both following
v_k = v_{k-1}/3 + v_{k-1}^2/3, and the routes to them through x = 1/3
"""

import logging
from fractions import Fraction
from series.polynomial import Polynomial, eval_poly
from genfun.protected import sqrt_pair
from asymptotics import asymptotics_config
from utils.decimal_render import render
from utils.error import AsymptoticsError, UsageError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

SINGULARITY = Fraction(1, 3)

def step(value:Fraction) -> Fraction:
    """ One level of the recurrence shared by p_k and b_k """
    return value / 3 + value * value / 3

class ProbabilitySequence:
    """ values[k] for k = 0 ... K, exact """

    def __init__(self, values:list):
        self.values = list(values)

    @classmethod
    def from_start(cls, start:Fraction, max_level:int) -> "ProbabilitySequence":

        values = [Fraction(start)]
        for _ in range(max_level):
            values.append(step(values[-1]))
        return cls(values)

    @property
    def max_level(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k:int) -> Fraction:
        return self.values[k]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def is_strictly_decreasing(self) -> bool:
        return all(later < earlier for earlier, later in zip(self.values, self.values[1:])) and self.values[-1] > 0

def _check_exact_level(max_level:int):

    if max_level < 0:
        logger.error(f"Level {max_level} is negative")
        raise UsageError("genfun.negative-level", {"level":max_level})
    if max_level > (limit := asymptotics_config.config()["max-exact-level"]):
        logger.error(f"Exact level {max_level} is above the limit {limit}")
        raise UsageError("asymptotics.exact-level-too-large", {"level":max_level, "limit":limit})

def protected_probability_sequence(max_level:int) -> ProbabilitySequence:
    """ p_0 = 1, every vertex is 0-protected """

    _check_exact_level(max_level)
    return ProbabilitySequence.from_start(Fraction(1), max_level)

def balanced_probability_sequence(max_level:int) -> ProbabilitySequence:
    """ b_0 = 1/3, the limiting proportion of leaves """

    _check_exact_level(max_level)
    return ProbabilitySequence.from_start(SINGULARITY, max_level)

def growth_ratios(max_level:int) -> list:
    """ p_{k+1}/p_k for k < max_level, each checked against (1 + p_k)/3 """

    sequence = protected_probability_sequence(max_level)
    ratios = []
    for k in range(max_level):
        ratio = sequence[k + 1] / sequence[k]
        if ratio != (1 + sequence[k]) / 3:
            logger.error(f"Growth ratio at level {k} is {render(ratio, 20)}, expected (1 + p_k)/3")
            raise AsymptoticsError("asymptotics.growth-ratio", {"level":k})
        ratios.append(ratio)
    return ratios

def bender_constant(numerator:Polynomial) -> Fraction:
    """ numerator(1/3).  For a polynomial numerator A, [x^n]A/sqrt(1 - 2x - 3x^2) ~ A(1/3) [x^n]1/sqrt(1 - 2x - 3x^2). """
    return eval_poly(numerator, SINGULARITY)

def protected_constant_via_pair(k:int) -> Fraction:
    """ p_k as (3/2) U_k(1/3).  At x = 1/3 the V_k sqrt(1 - 2x - 3x^2) part of 2x R_k vanishes. """
    return Fraction(3, 2) * eval_poly(sqrt_pair(k).U, SINGULARITY)
