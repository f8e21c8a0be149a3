# --------------------------------------------------------------------------------------
# Copyright 2024 by wbergman Authors, see git history for more details.
#
# Distributed under the terms of the BSD license.
#
# The full license is in the file LICENCE, distributed with this software.
# --------------------------------------------------------------------------------------
"""Command line entry point.

"""
import argparse
import logging
import sys

import toml

from .cli.commands import COMMANDS
from .cli.config import FORMATS, RunConfig
from .cli.output import render
from .conformal.maps import OutsideDomainError

logger = logging.getLogger(__name__)

#: Exit status of runs whose inputs were rejected.
INPUT_ERROR = 2

#: Exit status of runs that failed numerically or whose checks did not pass.
NUMERICAL_ERROR = 1

#: Options whose value may start with a dash, such as a complex point.
VALUE_OPTIONS = ("--zeta",)


def build_parser() -> argparse.ArgumentParser:
    """Parser of the command line, options of RunConfig keep their names."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", help="TOML file holding default values of the options"
    )
    common.add_argument("--format", choices=FORMATS, help="Output format")
    common.add_argument("--seed", type=int, help="Seed of randomized inputs")
    common.add_argument("--tol", type=float, help="Tolerance of 1D integrals")
    common.add_argument("--tol-2d", dest="tol_2d", type=float)
    common.add_argument(
        "--angular-count", dest="angular_count", type=int, help="Minimal angles M"
    )
    common.add_argument("--panel-depth", dest="panel_depth", type=int)
    common.add_argument(
        "-v", "--verbose", action="store_true", help="Log progress information"
    )
    common.add_argument(
        "-d",
        "--debug",
        help="Log debugging information and do not catch exceptions",
        action="store_true",
    )
    # Options absent from the command line must not override the configuration
    for action in common._actions:
        action.default = argparse.SUPPRESS

    parser = argparse.ArgumentParser(
        prog="wbergman",
        description="Weighted Bergman spaces and the weighted Cauchy transform",
        parents=[common],
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def weight(p):
        p.add_argument("--weight", help="const, pow:<a>, expexp or table:<path>")

    def conformal_map(p):
        p.add_argument(
            "--map", help="identity, poly:<c1,...>, scale:<l> or moebius:<a,l>"
        )

    def series(p, description="Taylor coefficients: JSON, file or random[:<degree>]"):
        p.add_argument("--series", help=description)
        p.add_argument("--degree", type=int, help="Degree of random series")

    p = subparsers.add_parser("moments", parents=[common], help="Moment table")
    weight(p)
    p.add_argument("--kmax", type=int, help="Largest moment index")

    p = subparsers.add_parser(
        "transform", parents=[common], help="Closed form and quadrature transform"
    )
    weight(p)
    conformal_map(p)
    series(p)
    p.add_argument(
        "--zeta",
        dest="zetas",
        action="append",
        help="Evaluation point, repeatable, values may start with a dash (-2.5i)",
    )
    p.add_argument("--window", type=int, help="Number of exterior coefficients")

    p = subparsers.add_parser("isometry", parents=[common], help="Isometry check")
    weight(p)
    series(p)

    p = subparsers.add_parser(
        "approx",
        parents=[common],
        help="Convergence of the regularized transforms",
        description="Passes when every sup deviation is below its bound. The "
        "monotone field records whether the deviations decrease along --n and is "
        "informational only, it does not affect the pass flag or the exit status.",
    )
    weight(p)
    conformal_map(p)
    series(p)
    p.add_argument("--n", dest="n_list", help="Comma separated indices, inf allowed")
    p.add_argument("--radius", type=float, help="Radius of the compact circle")
    p.add_argument("--cutoff", choices=("linear-ramp", "smoothstep-cubic"))

    p = subparsers.add_parser(
        "check-weight", parents=[common], help="Diagnostics of a weight"
    )
    weight(p)
    conformal_map(p)
    p.add_argument("--kmax", type=int, help="Largest moment index")
    p.add_argument("--samples", help="Comma separated decreasing points of (0, 1]")

    p = subparsers.add_parser(
        "dirichlet", parents=[common], help="Dirichlet type norm of a Laurent series"
    )
    weight(p)
    series(p, "Laurent coefficients b_1, b_2, ...: JSON, file or random[:<degree>]")

    p = subparsers.add_parser(
        "pair", parents=[common], help="Pairing functional and its bound"
    )
    weight(p)
    series(p)
    p.add_argument("--boundary", help="Negative Fourier coefficients f_-1, f_-2, ...")

    return parser


def setup_logging(verbose: bool, debug: bool) -> None:
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )


def attach_values(cmd_line_args, options=VALUE_OPTIONS) -> list:
    """Join the given options to their value so that "-2.5i" is not read as a flag."""
    joined = []
    remaining = iter(cmd_line_args)
    for arg in remaining:
        if arg in options:
            value = next(remaining, None)
            joined.append(arg if value is None else f"{arg}={value}")
        else:
            joined.append(arg)
    return joined


def main(cmd_line_args=None) -> int:
    """Main entry point of the wbergman command line tool."""
    parser = build_parser()
    if cmd_line_args is None:
        cmd_line_args = sys.argv[1:]
    args = parser.parse_args(attach_values(cmd_line_args))
    debug = getattr(args, "debug", False)
    setup_logging(getattr(args, "verbose", False), debug)

    try:
        config_path = getattr(args, "config", None)
        config = RunConfig.from_toml(config_path) if config_path else RunConfig()
        config.update_from_namespace(args)
        report = COMMANDS[args.command](config)
    except (ArithmeticError, OutsideDomainError) as e:
        if debug:
            raise
        print(f"wbergman: numerical failure: {e}", file=sys.stderr)
        return NUMERICAL_ERROR
    except (ValueError, KeyError, OSError, toml.TomlDecodeError) as e:
        if debug:
            raise
        print(f"wbergman: invalid input: {e}", file=sys.stderr)
        return INPUT_ERROR

    sys.stdout.write(render(report, config.format))
    if not report["pass"]:
        logger.info("Some checks did not pass")
        return NUMERICAL_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())  # pragma: no cover
