#!/usr/bin/env python3
"""
Monte Carlo estimate of a vertex proportion from uniformly sampled trees
"""

import logging
from actions import actions_config
from asymptotics.counts import exact_vertex_proportion
from sampler.monte_carlo import Statistic, monte_carlo_estimate
from utils.decimal_render import rational_record
from utils.error import UsageError
from utils.output import FormatOutput

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

def sample(n:int, statistic:str, samples:int = None, seed:int = None, workers:int = None, digits:int = None) -> FormatOutput:

    logger.info("Entering sample")

    sample_config = actions_config.command_config("sample")
    if seed is None:
        logger.error("No seed given for sampling")
        raise UsageError("sample.seed-required", {})
    if samples is None:
        samples = sample_config.get("samples", 10000)
    if digits is None:
        digits = sample_config.get("digits", 8)

    parsed = Statistic.parse(statistic)
    report = monte_carlo_estimate(n, parsed, samples, seed, workers)

    details = report.to_dict()
    details["estimate"] = rational_record(report.proportion, digits)
    details["standard_error"] = f"{report.standard_error:.{digits}f}"
    details["digits"] = digits
    if n <= sample_config.get("reference-max-n", 300):
        reference = exact_vertex_proportion(parsed.kind, n, parsed.k)
        details["reference"] = rational_record(reference, digits)
        details["within_3_standard_errors"] = report.within(reference, 3)

    row = {key:details[key] for key in ["n", "statistic", "samples", "seed", "standard_error"]}
    row["estimate"] = details["estimate"]["decimal"]
    output = FormatOutput(actions_config.config().get("output"))
    output.setSuccess("sample.success", row, details, [row], ["n", "statistic", "samples", "seed", "estimate", "standard_error"])

    logger.info("Exiting sample")

    return output
