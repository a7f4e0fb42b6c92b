#!/usr/bin/env python3
"""
Closed-form asymptotic counts, the b(n) growth bound, and exact finite-size proportions
"""

import logging
from fractions import Fraction
import mpmath
from asymptotics import asymptotics_config
from genfun.motzkin import check_order, leaf_count, motzkin_number, motzkin_series
from genfun.protected import protected_series
from genfun.balanced import balanced_root_series, balanced_series, balanced_total_series, eb_series
from utils.error import UsageError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

PROPORTION_LEAF = "leaf"
PROPORTION_PROTECTED = "protected"
PROPORTION_BALANCED = "balanced"
PROPORTION_BALANCED_RANK = "balanced-rank"

def _check_size(n:int):

    if n < 1:
        logger.error(f"Size {n} is less than 1")
        raise UsageError("asymptotics.bad-size", {"n":n})

def _precision() -> int:
    return asymptotics_config.config()["float-digits"]

def leaf_count_asymptotic(n:int) -> mpmath.mpf:
    """ sqrt(3/pi) 3^n / (2 sqrt(n)) """

    _check_size(n)
    with mpmath.workdps(_precision()):
        return +(mpmath.sqrt(3 / mpmath.pi) * mpmath.power(3, n) / (2 * mpmath.sqrt(n)))

def vertex_count_asymptotic(n:int) -> mpmath.mpf:
    """ n 3^(n+1) sqrt(3) (1 + 1/(16n)) / ((2n+3) sqrt((n+2) pi)) """

    _check_size(n)
    with mpmath.workdps(_precision()):
        n_mp = mpmath.mpf(n)
        numerator = n_mp * mpmath.power(3, n + 1) * mpmath.sqrt(3) * (1 + 1 / (16 * n_mp))
        return +(numerator / ((2 * n_mp + 3) * mpmath.sqrt((n_mp + 2) * mpmath.pi)))

def asymptotic_leaf_ratio(n:int) -> mpmath.mpf:
    with mpmath.workdps(_precision()):
        return +(leaf_count_asymptotic(n) / vertex_count_asymptotic(n))

class BalancedRootBoundReport:
    """ Outcome of checking b(n) n^2 <= base^n for 1 <= n <= max_n """

    def __init__(self, max_n:int, base:Fraction, counts:list, first_violation:int = None):
        self.max_n = max_n
        self.base = base
        self.counts = counts
        self.first_violation = first_violation

    @property
    def holds(self) -> bool:
        return self.first_violation is None

    def rows(self) -> list:
        return [{"n": n, "b": count, "b_n_squared": count * n * n, "bound": self.base**n} for n, count in enumerate(self.counts, start=1)]

def balanced_root_bound_check(max_n:int) -> BalancedRootBoundReport:
    """ Exact comparison of b(n) n^2 against base^n, base from configuration (29/10) """

    check_order(max_n)
    base = asymptotics_config.growth_base()

    series = balanced_root_series(max_n)
    counts = [int(series.coefficient(n)) for n in range(1, max_n + 1)]

    first_violation = None
    for n, count in enumerate(counts, start=1):
        if count * n * n > base**n:
            logger.warning(f"b({n}) n^2 = {count * n * n} exceeds {base}^{n}")
            first_violation = n
            break

    return BalancedRootBoundReport(max_n, base, counts, first_violation)

def exact_vertex_proportion(kind:str, n:int, k:int = None) -> Fraction:
    """ The proportion of vertices, over all trees of size n, that are leaves, k-protected, balanced, or balanced of rank k """

    _check_size(n)

    vertices = n * motzkin_number(n)
    if kind == PROPORTION_LEAF:
        return Fraction(leaf_count(n), vertices)
    if kind == PROPORTION_PROTECTED:
        return protected_series(k, n).coefficient(n) / vertices
    if kind == PROPORTION_BALANCED:
        return balanced_total_series(n).coefficient(n) / vertices
    if kind == PROPORTION_BALANCED_RANK:
        return balanced_series(k, n).coefficient(n) / vertices

    logger.error(f"Unknown proportion '{kind}'")
    raise UsageError("asymptotics.unknown-proportion", {"kind":kind})

def expected_rank_estimate(n:int) -> Fraction:
    """ eb(n) over the number of balanced vertices, the mean rank of a balanced vertex over trees of size n """

    _check_size(n)
    return eb_series(n).coefficient(n) / balanced_total_series(n).coefficient(n)

def protected_deviation(k:int, n:int, p_k:Fraction) -> Fraction:
    """ |[x^n]P_k / (n t_n) - p_k| """

    _check_size(n)
    t_n = motzkin_series(n).coefficient(n)
    return abs(protected_series(k, n).coefficient(n) / (n * t_n) - p_k)
