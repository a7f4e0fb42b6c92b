#!/usr/bin/env python3
"""
Verify generating-function coefficients against brute-force enumeration
"""

import logging
from actions import actions_config
from genfun.motzkin import motzkin_series, leaves_series
from genfun.protected import protected_series
from genfun.balanced import balanced_series, balanced_total_series, balanced_root_series, eb_series
from genfun.residuals import residuals, vanishes
from trees.aggregate import aggregate
from utils.error import UsageError
from utils.output import FormatOutput

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

class Check:
    """ One comparison of a brute-force total with a coefficient """

    def __init__(self, n:int, statistic:str, oracle:int, series:int):
        self.n = n
        self.statistic = statistic
        self.oracle = oracle
        self.series = series

    @property
    def passed(self) -> bool:
        return self.oracle == self.series

    def to_dict(self) -> dict:
        return {"n": self.n, "statistic": self.statistic, "oracle": self.oracle, "series": self.series, "pass": self.passed}

def _series_table(max_n:int, max_k:int) -> dict:
    """ Every series compared, keyed by statistic name, all to order max_n """

    table = {
        "trees": motzkin_series(max_n),
        "leaves": leaves_series(max_n),
        "balanced": balanced_total_series(max_n),
        "balanced-root": balanced_root_series(max_n),
        "eb": eb_series(max_n),
    }
    for k in range(max_k + 1):
        table[f"protected:{k}"] = protected_series(k, max_n)
        table[f"balanced-rank:{k}"] = balanced_series(k, max_n)
    return table

def run_checks(max_n:int, max_k:int, workers:int = None) -> list:

    series = _series_table(max_n, max_k)
    checks = []
    for n in range(1, max_n + 1):
        counts = aggregate(n, max_k, workers)
        logger.debug(f"Comparing {counts.trees} trees of size {n}")

        oracle = {
            "trees": counts.trees,
            "leaves": counts.leaves_total,
            "balanced": counts.balanced_total,
            "balanced-root": counts.balanced_root_trees,
            "eb": counts.eb,
        }
        for k in range(max_k + 1):
            oracle[f"protected:{k}"] = counts.protected(k)
            oracle[f"balanced-rank:{k}"] = counts.balanced_rank(k)

        for statistic, value in oracle.items():
            checks.append(Check(n, statistic, value, int(series[statistic].coefficient(n))))
    return checks

def verify(max_n:int = None, max_k:int = None, workers:int = None) -> tuple:
    """ Returns the output and whether every comparison and identity held """

    logger.info("Entering verify")

    verify_config = actions_config.command_config("verify")
    if max_n is None:
        max_n = verify_config.get("default-max-n", 12)
    if max_k is None:
        max_k = verify_config.get("default-max-k", 4)

    if max_n > (limit := verify_config.get("max-n", 14)):
        logger.error(f"max-n {max_n} is above {limit}")
        raise UsageError("verify.max-n-too-large", {"max_n":max_n, "limit":limit})

    checks = run_checks(max_n, max_k, workers)
    identities = {name: vanishes(residual) for name, residual in residuals(max_n, max_k).items()}

    failures = [check for check in checks if not check.passed] + [name for name, held in identities.items() if not held]
    rows = [check.to_dict() for check in checks]
    details = {"max_n": max_n, "max_k": max_k, "checks": rows, "identities": identities}

    output = FormatOutput(actions_config.config().get("output"))
    if len(failures) == 0:
        output.setSuccess("verify.success", {"max_n":max_n, "max_k":max_k}, details, rows)
    else:
        logger.warning(f"{len(failures)} verification failures")
        output.setInformation("verify.mismatch", {"max_n":max_n, "failures":len(failures), "checks":len(checks) + len(identities)}, details, rows)

    logger.info("Exiting verify")

    return output, len(failures) == 0
