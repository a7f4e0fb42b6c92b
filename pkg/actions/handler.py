#!/usr/bin/env python3
"""
Handler to run a motzkinware command
"""

import logging
import sys
import argparse
import configparser
from pathlib import Path
from importlib.metadata import version, PackageNotFoundError
from utils.error import MotzkinwareError, ErrorCategory, UsageError
from utils.request import Request, OUTPUT_FORMATS
from utils.config import ConfigBase
from utils.output import FormatOutput
import utils.logging
from actions import actions_config
import actions.table as table
import actions.coeffs as coeffs
import actions.verify as verify
import actions.bounds as bounds
import actions.sample as sample

utils.logging.configureLogging()
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

PROG = "motzkinware"

HANDLER_TEXTS_YAML = "handler_texts.yaml"
HANDLER_TEXTS_YAML_PATH = str(Path(__file__).absolute().parent.joinpath(HANDLER_TEXTS_YAML))

COMMAND_TABLE = "table"
COMMAND_COEFFS = "coeffs"
COMMAND_VERIFY = "verify"
COMMAND_BOUNDS = "bounds"
COMMAND_EXPECTED_RANK = "expected-rank"
COMMAND_SAMPLE = "sample"
COMMANDS = [COMMAND_TABLE, COMMAND_COEFFS, COMMAND_VERIFY, COMMAND_BOUNDS, COMMAND_EXPECTED_RANK, COMMAND_SAMPLE]

DEFAULT_EXIT_CODES = {"success": 0, "internal": 1, "usage": 2, "verification": 3}

def _exit_codes() -> dict:

    try:
        return DEFAULT_EXIT_CODES | (actions_config.config().get("exit-codes") or {})
    except MotzkinwareError:
        return DEFAULT_EXIT_CODES

def _run(parameters:dict) -> tuple:
    """ Returns the command output and whether the command's checks all held """

    command = Request.command
    if (digits := parameters.get("digits")) is not None and digits < 0:
        logger.error(f"digits is {digits}")
        raise UsageError("digits-negative", {"digits":digits})

    if command == COMMAND_TABLE:
        return table.table(parameters.get("max_k"), parameters.get("digits")), True
    if command == COMMAND_COEFFS:
        return coeffs.coeffs(parameters.get("selector"), parameters.get("n_range")), True
    if command == COMMAND_VERIFY:
        return verify.verify(parameters.get("max_n"), parameters.get("max_k"), parameters.get("workers"))
    if command == COMMAND_BOUNDS:
        return bounds.bounds(parameters.get("cutoff"), parameters.get("digits")), True
    if command == COMMAND_EXPECTED_RANK:
        return bounds.expected_rank(parameters.get("cutoff"), parameters.get("digits")), True
    return sample.sample(parameters.get("n"), parameters.get("statistic"), parameters.get("samples"), parameters.get("seed"),
                         parameters.get("workers"), parameters.get("digits")), True

def handle(request_parameters:dict) -> tuple:
    """ Runs one command.  Returns (exit code, rendered output). """

    Request.set(request_parameters, getVersion(PROG))

    # This will set the ConfigBase.base_dir value so we can load config from this directory
    ConfigBase.init()

    # Load the texts file with the handler's error messages
    handler_output = FormatOutput({"template-text-file":[ConfigBase.getConfigPath(HANDLER_TEXTS_YAML_PATH), actions_config.ACTIONS_TEXTS_YAML_PATH]})
    exit_codes = _exit_codes()
    output = handler_output

    if Request.command is None:
        logger.error("command is a mandatory parameter")
        handler_output.setError("command-is-mandatory", {})
        exit_code = exit_codes["usage"]
    elif Request.command not in COMMANDS:
        logger.error(f"the command parameter must be one of {COMMANDS}")
        handler_output.setError("command-value", {"commands":COMMANDS})
        exit_code = exit_codes["usage"]
    else:
        try:
            output, checks_held = _run(Request.parameters)
            exit_code = exit_codes["success"] if checks_held else exit_codes["verification"]

        except MotzkinwareError as error:
            logger.error(f"{error.text_key} {error.template_values}")
            handler_output.setError(error.text_key, error.template_values)
            output = handler_output
            if error.category == ErrorCategory.USAGE:
                exit_code = exit_codes["usage"]
            else:
                exit_code = exit_codes["internal"]

        except Exception as e:
            logger.exception(e)
            handler_output.setError("internal-error", {})
            output = handler_output
            exit_code = exit_codes["internal"]

    content_type, body = output.getContent()
    logger.debug(f"Returning {content_type}, exit code {exit_code}")
    return exit_code, body

def getVersion(prog):

    # This will search sys.path for motzkinware.egg-info/.dist-info directory to get the version from the PKG-INFO file
    try:

        version_number = version(prog)

        return version_number

    except PackageNotFoundError:
        pass

    # If the above fails then get the version from the local setup.cfg file
    setup_config_parser = configparser.ConfigParser()
    setup_config_parser.read(str(Path(__file__).absolute().parent.parent.joinpath("setup.cfg")))
    if setup_config_parser.has_section("metadata"):
        setup_config_dict = dict(setup_config_parser.items("metadata"))
        if "version" in setup_config_dict:
            return setup_config_dict["version"]

    return None

def main():

    format_help = "Format for output"
    digits_help = "Decimal places in rendered values"

    parser = argparse.ArgumentParser(prog=PROG, description="Exact generating functions, asymptotic probabilities and interval bounds for protected and balanced vertices in Motzkin trees, checked by brute force and by sampling")

    version_str = f"{parser.prog} v{getVersion(parser.prog)}"
    parser.add_argument("-v", "--version", action="version", version=version_str)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-f", "--format", required=False, help=format_help, default="text", choices=OUTPUT_FORMATS)

    subparsers = parser.add_subparsers(dest="command", required=True)

    # table
    parser_table = subparsers.add_parser(COMMAND_TABLE, parents=[common], help="Limiting probability that a vertex is k-protected")
    parser_table.add_argument("--max-k", type=int, required=False, help="Highest protection level")
    parser_table.add_argument("--digits", type=int, required=False, help=digits_help)

    # coeffs
    parser_coeffs = subparsers.add_parser(COMMAND_COEFFS, parents=[common], help="Exact coefficients of a generating function")
    parser_coeffs.add_argument("selector", help=f"One of {', '.join(coeffs.VALID_SELECTORS)}")
    parser_coeffs.add_argument("--n-range", required=False, help="Sizes as FIRST..LAST")

    # verify
    parser_verify = subparsers.add_parser(COMMAND_VERIFY, parents=[common], help="Compare brute-force counts with generating-function coefficients")
    parser_verify.add_argument("--max-n", type=int, required=False, help="Largest tree size enumerated")
    parser_verify.add_argument("--max-k", type=int, required=False, help="Highest protection level and balanced rank compared")
    parser_verify.add_argument("--workers", type=int, required=False, help="Processes to enumerate with")

    # bounds
    parser_bounds = subparsers.add_parser(COMMAND_BOUNDS, parents=[common], help="Interval for the probability that a vertex is balanced")
    parser_bounds.add_argument("--cutoff", type=int, required=False, help="Levels summed before the geometric tail")
    parser_bounds.add_argument("--digits", type=int, required=False, help=digits_help)

    # expected-rank
    parser_expected_rank = subparsers.add_parser(COMMAND_EXPECTED_RANK, parents=[common], help="Interval for the expected rank of a balanced vertex")
    parser_expected_rank.add_argument("--cutoff", type=int, required=False, help="Levels summed before the geometric tail")
    parser_expected_rank.add_argument("--digits", type=int, required=False, help=digits_help)

    # sample
    parser_sample = subparsers.add_parser(COMMAND_SAMPLE, parents=[common], help="Monte Carlo estimate of a vertex proportion")
    parser_sample.add_argument("-n", type=int, required=True, help="Tree size")
    parser_sample.add_argument("--statistic", required=True, help="leaf, balanced, protected:K, K-protected or balanced-rank:K")
    parser_sample.add_argument("--samples", type=int, required=False, help="Number of sampled vertices")
    parser_sample.add_argument("--seed", type=int, required=True, help="Seed for the random generator")
    parser_sample.add_argument("--workers", type=int, required=False, help="Processes to sample with")
    parser_sample.add_argument("--digits", type=int, required=False, help=digits_help)

    args = parser.parse_args()

    # Print out version string for the logs.  Do it after we parse the args so we don't print it twice if run with --version
    print(version_str, file=sys.stderr)

    exit_code, body = handle(vars(args))

    # csv bodies already end with CRLF, a second line ending would add an empty record
    sys.stdout.write(body if body.endswith("\n") else body + "\n")

    return exit_code


if __name__ == "__main__":
    sys.exit(main())
