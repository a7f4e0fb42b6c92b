#!/usr/bin/env python3
"""
Rigorous enclosures of the probability that a vertex is balanced, and of the expected rank of a balanced vertex.

Both are series over b_k.  Levels up to the cutoff m are summed, the remaining terms are bounded by geometric
tails since (1/3)^j b_m <= b_{m+j} <= (1/3 + b_m)^j b_m.
"""

import logging
import math
from fractions import Fraction
from asymptotics import asymptotics_config
from asymptotics.sequences import SINGULARITY, step
from utils.decimal_render import Rounding, render, render_exact
from utils.error import AsymptoticsError, UsageError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

class BoundInterval:
    """ [lower, upper] with exact rational endpoints, obtained at cutoff m """

    def __init__(self, lower:Fraction, upper:Fraction, cutoff:int):

        if lower > upper:
            logger.error(f"Interval endpoints are inverted at cutoff {cutoff}")
            raise AsymptoticsError("asymptotics.inverted-interval", {"cutoff":cutoff})
        self.lower = Fraction(lower)
        self.upper = Fraction(upper)
        self.cutoff = cutoff

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def contains(self, value) -> bool:
        if isinstance(value, BoundInterval):
            return self.lower <= value.lower and value.upper <= self.upper
        return self.lower <= value <= self.upper

    def render(self, digits:int) -> dict:
        """ Lower rounded toward -inf, upper toward +inf, so the printed interval contains this one """

        return {
            "cutoff": self.cutoff,
            "lower": {"exact": render_exact(self.lower), "decimal": render(self.lower, digits, Rounding.FLOOR), "digits": digits},
            "upper": {"exact": render_exact(self.upper), "decimal": render(self.upper, digits, Rounding.CEILING), "digits": digits},
        }

    def __repr__(self):
        return f"BoundInterval(cutoff={self.cutoff}, [{render(self.lower, 20, Rounding.FLOOR)}, {render(self.upper, 20, Rounding.CEILING)}])"

def _round_to(value:Fraction, scale:int, rounding:Rounding) -> Fraction:

    scaled = value * scale
    return Fraction(math.floor(scaled) if rounding == Rounding.FLOOR else math.ceil(scaled), scale)

def balanced_level_enclosures(max_level:int) -> list:
    """ (lo_k, hi_k) with lo_k <= b_k <= hi_k for k = 0 ... max_level.

    Levels up to exact-levels are exact (lo_k = hi_k).  Above that each step is rounded outward to working-digits
    decimal places; the step map is increasing for b >= 0 so the enclosure carries through.
    """

    settings = asymptotics_config.config()
    exact_levels = settings["exact-levels"]
    scale = 10**settings["working-digits"]

    enclosures = [(SINGULARITY, SINGULARITY)]
    for k in range(1, max_level + 1):
        lower, upper = enclosures[-1]
        if k <= exact_levels:
            value = step(lower)
            enclosures.append((value, value))
        else:
            enclosures.append((_round_to(step(lower), scale, Rounding.FLOOR), _round_to(step(upper), scale, Rounding.CEILING)))
    return enclosures

def geometric_tail(start:Fraction, ratio:Fraction) -> Fraction:
    """ sum_{j>=1} start ratio^j """

    if ratio >= 1:
        logger.error(f"Tail ratio {render(ratio, 20, Rounding.FLOOR)} is not below 1")
        raise AsymptoticsError("asymptotics.ratio-too-large", {"ratio":render_exact(ratio)})
    return start * ratio / (1 - ratio)

def weighted_tail(m:int, ratio:Fraction) -> Fraction:
    """ sum_{j>=m} j ratio^(j-m) = (m - (m-1) ratio)/(1 - ratio)^2 """

    if ratio >= 1:
        logger.error(f"Tail ratio {render(ratio, 20, Rounding.FLOOR)} is not below 1")
        raise AsymptoticsError("asymptotics.ratio-too-large", {"ratio":render_exact(ratio)})
    return (m - (m - 1) * ratio) / (1 - ratio)**2

def _check_cutoff(cutoff:int, minimum:int):

    if cutoff < minimum:
        logger.error(f"Cutoff {cutoff} is below {minimum}")
        raise UsageError("asymptotics.bad-cutoff", {"cutoff":cutoff, "minimum":minimum})

def balanced_probability_bounds(cutoff:int) -> BoundInterval:
    """ sum_{k<=m} b_k plus the tail over k > m, bounded with ratios 1/3 (lower) and 1/3 + b_m (upper) """

    _check_cutoff(cutoff, 0)
    enclosures = balanced_level_enclosures(cutoff)

    lower = sum(lo for lo, _ in enclosures)
    upper = sum(hi for _, hi in enclosures)
    last_lower, last_upper = enclosures[cutoff]

    lower += geometric_tail(last_lower, SINGULARITY)
    upper += geometric_tail(last_upper, SINGULARITY + last_upper)

    logger.debug(f"Balanced probability bounds at cutoff {cutoff} computed")
    return BoundInterval(lower, upper, cutoff)

def expected_rank_bounds(cutoff:int) -> BoundInterval:
    """ E[rank | balanced] = (sum_k k b_k) / (sum_k b_k).

    The numerator is summed for k < m with the tail over j >= m bounded as in balanced_probability_bounds, then
    each numerator bound is divided by the opposite bound on the probability of being balanced.
    """

    _check_cutoff(cutoff, 1)
    enclosures = balanced_level_enclosures(cutoff)

    numerator_lower = sum(k * lo for k, (lo, _) in enumerate(enclosures[:cutoff]))
    numerator_upper = sum(k * hi for k, (_, hi) in enumerate(enclosures[:cutoff]))
    last_lower, last_upper = enclosures[cutoff]

    numerator_lower += last_lower * weighted_tail(cutoff, SINGULARITY)
    numerator_upper += last_upper * weighted_tail(cutoff, SINGULARITY + last_upper)

    probability = balanced_probability_bounds(cutoff)
    return BoundInterval(numerator_lower / probability.upper, numerator_upper / probability.lower, cutoff)

def reference_cutoff() -> int:
    return asymptotics_config.config()["reference-cutoff"]
