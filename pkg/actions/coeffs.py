#!/usr/bin/env python3
"""
Exact coefficients of the generating functions
"""

import logging
import re
from actions import actions_config
from genfun.motzkin import motzkin_series, leaves_series
from genfun.protected import protected_series, protected_root_series
from genfun.balanced import balanced_series, balanced_total_series, balanced_root_series, eb_series
from utils.error import UsageError
from utils.output import FormatOutput

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

# Selectors without a level take the order only, the others take (k, order)
PLAIN_SELECTORS = {
    "motzkin": motzkin_series,
    "leaves": leaves_series,
    "balanced": balanced_total_series,
    "balanced-root": balanced_root_series,
    "eb": eb_series,
}
LEVEL_SELECTORS = {
    "protected": protected_series,
    "protected-root": protected_root_series,
    "balanced-rank": balanced_series,
}
VALID_SELECTORS = list(PLAIN_SELECTORS.keys()) + [f"{name}:k" for name in LEVEL_SELECTORS.keys()]

def _unknown(selector:str):
    logger.error(f"Unknown selector '{selector}'")
    return UsageError("coeffs.unknown-selector", {"selector":selector, "valid":VALID_SELECTORS})

def series_for(selector:str, order:int):
    """ The truncated series named by a selector such as 'leaves' or 'protected:2' """

    selector = selector.strip().lower()
    if selector in PLAIN_SELECTORS:
        return PLAIN_SELECTORS[selector](order)

    if (match := re.fullmatch(r"([a-z-]+):(\d+)", selector)) is None or match.group(1) not in LEVEL_SELECTORS:
        raise _unknown(selector)
    return LEVEL_SELECTORS[match.group(1)](int(match.group(2)), order)

def parse_range(n_range:str) -> tuple:
    """ 'FIRST..LAST', 'FIRST-LAST' or a single 'N' """

    if (match := re.fullmatch(r"\s*(\d+)\s*(?:(?:\.\.|-)\s*(\d+)\s*)?", str(n_range))) is None:
        raise UsageError("coeffs.bad-range", {"n_range":n_range})
    first = int(match.group(1))
    last = int(match.group(2)) if match.group(2) is not None else first
    if first > last:
        raise UsageError("coeffs.bad-range", {"n_range":n_range})
    return first, last

def coeffs(selector:str, n_range:str = None) -> FormatOutput:

    logger.info("Entering coeffs")

    coeffs_config = actions_config.command_config("coeffs")
    if n_range is None:
        n_range = coeffs_config.get("n-range", "1..10")

    first, last = parse_range(n_range)
    if last > (limit := coeffs_config.get("max-order", 2000)):
        logger.error(f"Requested order {last} is above {limit}")
        raise UsageError("coeffs.range-too-large", {"last":last, "limit":limit})

    series = series_for(selector, max(last, 1))

    rows = [{"n": n, "coefficient": int(series.coefficient(n))} for n in range(first, last + 1)]

    output = FormatOutput(actions_config.config().get("output"))
    output.setSuccess("coeffs.success", {"selector":selector, "first":first, "last":last},
                      {"selector": selector, "coefficients": [{"n": row["n"], "coefficient": str(row["coefficient"])} for row in rows]},
                      rows, ["n", "coefficient"])

    logger.info("Exiting coeffs")

    return output
