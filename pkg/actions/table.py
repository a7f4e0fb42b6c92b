#!/usr/bin/env python3
"""
The table of limiting k-protected probabilities
"""

import logging
from actions import actions_config
from asymptotics.sequences import protected_probability_sequence
from utils.decimal_render import rational_record
from utils.error import UsageError
from utils.output import FormatOutput

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

def table(max_k:int = None, digits:int = None) -> FormatOutput:

    logger.info("Entering table")

    table_config = actions_config.command_config("table")
    if max_k is None:
        max_k = table_config.get("max-k", 6)
    if digits is None:
        digits = table_config.get("digits", 8)

    if max_k < 1:
        logger.error(f"max-k is {max_k}")
        raise UsageError("table.bad-max-k", {"max_k":max_k})

    sequence = protected_probability_sequence(max_k)

    rows = []
    records = []
    for k in range(1, max_k + 1):
        record = rational_record(sequence[k], digits)
        records.append({"k": k, "probability": record})
        rows.append({"k": k, "exact": record["exact"], "decimal": record["decimal"]})

    output = FormatOutput(actions_config.config().get("output"))
    output.setSuccess("table.success", {"max_k":max_k}, {"digits": digits, "levels": records}, rows, ["k", "exact", "decimal"])

    logger.info("Exiting table")

    return output
