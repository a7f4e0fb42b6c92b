#!/usr/bin/env python3
"""
Interval bounds for the probability that a vertex is balanced and for the expected rank of a balanced vertex
"""

import logging
from actions import actions_config
from asymptotics.bounds import BoundInterval, balanced_probability_bounds, expected_rank_bounds, reference_cutoff
from asymptotics import asymptotics_config
from utils.decimal_render import render, render_exact, Rounding
from utils.output import FormatOutput

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

def _output(command:str, bound_function, cutoff:int, digits:int) -> FormatOutput:

    command_config = actions_config.command_config(command)
    if cutoff is None:
        cutoff = asymptotics_config.config()["default-cutoff"]
    if digits is None:
        digits = command_config.get("digits", 18)

    interval:BoundInterval = bound_function(cutoff)
    reference:BoundInterval = bound_function(max(cutoff, reference_cutoff()))

    rendered = interval.render(digits)
    details = rendered | {
        "width": render(interval.width, digits + 2, Rounding.CEILING),
        "reference": {
            "cutoff": reference.cutoff,
            "exact": render_exact(reference.midpoint),
            "decimal": render(reference.midpoint, digits + 6),
            "digits": digits + 6,
            "contained": interval.contains(reference),
        },
    }
    rows = [{"lower": rendered["lower"]["decimal"], "upper": rendered["upper"]["decimal"]}]

    output = FormatOutput(actions_config.config().get("output"))
    output.setSuccess(f"{command}.success", {"lower":rendered["lower"]["decimal"], "upper":rendered["upper"]["decimal"], "cutoff":cutoff},
                      details, rows, ["lower", "upper"])
    return output

def bounds(cutoff:int = None, digits:int = None) -> FormatOutput:

    logger.info("Entering bounds")
    output = _output("bounds", balanced_probability_bounds, cutoff, digits)
    logger.info("Exiting bounds")
    return output

def expected_rank(cutoff:int = None, digits:int = None) -> FormatOutput:

    logger.info("Entering expected-rank")
    output = _output("expected-rank", expected_rank_bounds, cutoff, digits)
    logger.info("Exiting expected-rank")
    return output
