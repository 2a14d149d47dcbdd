"""Command line interface.

Every command writes CSV or JSON to standard output, or to the file named
by ``-o/--output``. The exit code is 0 on success, 1 on a usage error and
2 when ``verify`` finds a failing check.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from gradii import __version__, bounds
from gradii.classg import GAlphaSpec
from gradii.radii import (
    RHO_MAX,
    SCAN_STEP,
    TOLERANCE,
    RadiusProperty,
    RadiusQuery,
    aux_psi,
    radius_of_property,
)
from gradii.verify import DEFAULT_SEED, SUITES, run_suites

logger = logging.getLogger(__name__)

COMMANDS = ("radius", "table", "figure", "bounds", "thresholds", "verify")

#: Orders ``beta`` drawn in the curve figures.
FIGURE_BETAS = (0.0, 0.2, 0.4, 0.6, 0.8)

#: Step of ``alpha`` in the curve figures, which run from one step to 1.
FIGURE_ALPHA_STEP = 0.05

#: Last section degree in the radius figure.
FIGURE_LAST_SECTION = 40

_FIGURE_CURVES = {1: 2, 2: 6}

_FLOAT_FORMAT = "%.10g"

_FAILURE_EXIT = 2


class UsageError(Exception):
    """Raised for malformed or out of range command line arguments."""

    def __init__(self, message: str, command: Optional[str] = None):
        super().__init__(message)
        self.command = command


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message, self.prog.split()[-1])


def _property(text: str) -> RadiusProperty:
    prop = RadiusProperty.parse(text)
    if prop is None:
        raise argparse.ArgumentTypeError(
            f"invalid property '{text}' (choose from convex, starlike, ctc)"
        )
    return prop


def _build_parser() -> Tuple[argparse.ArgumentParser,
                             Dict[str, argparse.ArgumentParser]]:
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "-o", "--output",
        type=Path,
        default=None,
        help="write the output to this file instead of standard output"
    )
    common.add_argument(
        "--exploratory",
        action="store_true",
        help="accept alpha > 1 (with a warning)"
    )
    common.add_argument(
        "-v", "--verbose",
        action="count",
        default=0,
        help="log progress to standard error (repeat for more detail)"
    )

    parser = _ArgumentParser(
        prog="gradii",
        description="Radii of convexity, starlikeness and "
                    "close-to-convexity of sections of functions in G(alpha)."
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND",
                                       required=True)
    commands = {}

    radius = subparsers.add_parser(
        "radius", parents=[common],
        help="radius of a property of order beta"
    )
    radius.add_argument("--alpha", type=float, required=True)
    radius.add_argument("--beta", type=float, required=True)
    radius.add_argument("--property", type=_property, required=True,
                        metavar="convex|starlike|ctc")
    radius.add_argument(
        "--tol", type=float, default=TOLERANCE,
        help="bracket width of the root (default: %(default)g)"
    )
    radius.add_argument("--json", action="store_true",
                        help="JSON output (the default)")
    commands["radius"] = radius

    table = subparsers.add_parser(
        "table", parents=[common],
        help="CSV of radii over a grid of alpha and beta"
    )
    table.add_argument("--property", type=_property, required=True,
                       metavar="convex|starlike|ctc")
    for name in ("alpha", "beta"):
        for end in ("min", "max", "step"):
            table.add_argument(f"--{name}-{end}", type=float, required=True)
    commands["table"] = table

    figure = subparsers.add_parser(
        "figure", parents=[common], help="CSV data of a figure"
    )
    figure.add_argument("--id", type=int, choices=(1, 2, 3), required=True,
                        dest="figure_id")
    commands["figure"] = figure

    bounds_cmd = subparsers.add_parser(
        "bounds", parents=[common],
        help="tail bounds and tail sums at one radius"
    )
    bounds_cmd.add_argument("--n", type=int, required=True)
    bounds_cmd.add_argument("--alpha", type=float, required=True)
    bounds_cmd.add_argument("--rho", type=float, required=True)
    commands["bounds"] = bounds_cmd

    thresholds = subparsers.add_parser(
        "thresholds", parents=[common],
        help="least section degrees of the large-n theorems"
    )
    thresholds.add_argument("--json", action="store_true",
                            help="JSON output (the default)")
    commands["thresholds"] = thresholds

    verify = subparsers.add_parser(
        "verify", parents=[common], help="run the verification suites"
    )
    verify.add_argument("--suite", choices=("all", *SUITES), default="all")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="global seed (default: %(default)s)")
    verify.add_argument("--json", action="store_true",
                        help="one JSON report per line")
    commands["verify"] = verify

    return parser, commands


@dataclass
class CliConfig:
    """Parsed command line."""

    #: One of :py:data:`COMMANDS`.
    command: str

    #: Command specific flags, by attribute name.
    flags: dict = field(default_factory=dict)

    #: Output file; standard output if None.
    output: Optional[Path] = None

    #: Global seed of ``verify``.
    seed: int = DEFAULT_SEED

    #: Accept ``alpha > 1``.
    exploratory: bool = False

    #: Number of ``-v`` flags.
    verbose: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command '{self.command}'")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> CliConfig:
        flags = vars(args).copy()
        common = {key: flags.pop(key)
                  for key in ("command", "output", "exploratory", "verbose")}
        return cls(seed=flags.pop("seed", DEFAULT_SEED), flags=flags,
                   **common)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=_FLOAT_FORMAT,
                        lineterminator="\n")


def _emit(text: str, output: Optional[Path]):
    if output is None:
        sys.stdout.write(text)
        return
    with open(output, "w", newline="\n") as f:
        f.write(text)
    logger.info("wrote %s", output)


def _steps(low: float, high: float, step: float, name: str) -> List[float]:
    """Points ``low, low + step, ...`` up to `high` inclusive."""
    if not step > 0:
        raise UsageError(f"--{name}-step must be positive, got {step}")
    if high < low:
        raise UsageError(
            f"--{name}-max ({high}) is smaller than --{name}-min ({low})"
        )
    count = math.floor((high - low) / step + 1e-9) + 1
    return [round(low + i * step, 12) for i in range(count)]


def _radius(config: CliConfig) -> str:
    flags = config.flags
    if not flags["tol"] > 0:
        raise UsageError(f"--tol must be positive, got {flags['tol']}")
    query = RadiusQuery(flags["alpha"], flags["beta"], flags["property"],
                        exploratory=config.exploratory)
    result = radius_of_property(query, tol=flags["tol"])
    return _dumps({
        "query": query.to_dict(),
        "result": {"rho": result.rho,
                   "residual": result.residual,
                   "converged": result.converged},
        "meta": {"tol": flags["tol"],
                 "scanStep": SCAN_STEP,
                 "version": __version__},
    })


def _table(config: CliConfig) -> str:
    flags = config.flags
    alphas = _steps(flags["alpha_min"], flags["alpha_max"],
                    flags["alpha_step"], "alpha")
    betas = _steps(flags["beta_min"], flags["beta_max"],
                   flags["beta_step"], "beta")
    rows = []
    for alpha in alphas:
        for beta in betas:
            query = RadiusQuery(alpha, beta, flags["property"],
                                exploratory=config.exploratory)
            result = radius_of_property(query)
            rows.append((alpha, beta, result.rho, result.residual,
                         result.converged))
    return _to_csv(pd.DataFrame(
        rows, columns=["alpha", "beta", "rho", "residual", "converged"]
    ))


def emit_figure_data(figure_id: int) -> pd.DataFrame:
    """Data behind figure `figure_id`.

    Figures 1 and 2 are the curves 2 and 6 as functions of ``alpha`` for
    the orders in :py:data:`FIGURE_BETAS`; figure 3 is
    :py:func:`gradii.bounds.fig3_radius` for ``n = 2, ..., 40``.

    Raises
    ------
    ValueError
        If `figure_id` is not 1, 2 or 3.
    """
    if figure_id == 3:
        sections = range(2, FIGURE_LAST_SECTION + 1)
        return pd.DataFrame({
            "n": list(sections),
            "radius": [bounds.fig3_radius(n) for n in sections],
        })
    if figure_id not in _FIGURE_CURVES:
        raise ValueError(f"No figure with id {figure_id}")
    index = _FIGURE_CURVES[figure_id]
    alphas = np.round(
        np.arange(1, round(1 / FIGURE_ALPHA_STEP) + 1) * FIGURE_ALPHA_STEP,
        12
    )
    frames = [
        pd.DataFrame({"alpha": alphas,
                      "beta": beta,
                      f"psi{index}": aux_psi(index, alphas, beta)})
        for beta in FIGURE_BETAS
    ]
    return pd.concat(frames, ignore_index=True)


def _figure(config: CliConfig) -> str:
    return _to_csv(emit_figure_data(config.flags["figure_id"]))


def _bounds(config: CliConfig) -> str:
    flags = config.flags
    n, alpha, rho = flags["n"], flags["alpha"], flags["rho"]
    if n < 2:
        raise UsageError(f"--n must be at least 2, got {n}")
    if not 0 <= rho <= RHO_MAX:
        raise UsageError(f"--rho must be in [0, 1), got {rho}")
    GAlphaSpec(alpha, config.exploratory)
    return _dumps({
        "query": {"n": n, "alpha": alpha, "rho": rho},
        "bounds": {
            "tail_abs": bounds.tail_abs_bound(alpha, rho),
            "tail_deriv": bounds.tail_deriv_bound(alpha, rho),
            "tail_second_deriv": bounds.tail_second_deriv_bound(alpha, rho),
            "S1": bounds.s1_value(n, rho),
            "S2": bounds.s2_value(n, rho),
        },
    })


def _thresholds(config: CliConfig) -> str:
    ctc = bounds.threshold_ctc()
    starlike = bounds.threshold_starlike()
    return _dumps({
        "ctc_n": ctc,
        "starlike_n": starlike,
        "C_n": bounds.c_n(ctc),
        "E_n": bounds.e_n(starlike),
        "F_n": bounds.f_n(starlike),
        "ctc_angle_deg": bounds.arcsin_degrees(bounds.c_n(ctc)),
        "starlike_angle_deg": bounds.starlike_angle(starlike),
    })


def _verify(config: CliConfig) -> Tuple[str, int]:
    reports = run_suites([config.flags["suite"]], seed=config.seed)
    failed = [r for r in reports if not r.passed]
    if config.flags["json"]:
        text = "".join(r.to_json() + "\n" for r in reports)
    else:
        text = "".join(
            f"{'PASS' if r.passed else 'FAIL'} {r.check_id} "
            f"{r.worst_margin:.3e}\n"
            for r in reports
        )
        text += f"{len(reports) - len(failed)} passed, {len(failed)} failed\n"
    for report in failed:
        logger.error("check %s failed (worst margin %g)",
                     report.check_id, report.worst_margin)
    return text, _FAILURE_EXIT if failed else 0


_RUNNERS = {
    "radius": _radius,
    "table": _table,
    "figure": _figure,
    "bounds": _bounds,
    "thresholds": _thresholds,
}


def _usage_error(error: Exception, command: Optional[str]) -> int:
    parser, commands = _build_parser()
    usage = commands.get(command, parser).format_usage()
    sys.stderr.write(f"gradii: error: {error}\n{usage}")
    return 1


def run(config: CliConfig) -> int:
    """Execute `config` and return the exit code."""
    try:
        if config.command == "verify":
            text, code = _verify(config)
        else:
            text, code = _RUNNERS[config.command](config), 0
    except (UsageError, ValueError) as e:
        return _usage_error(e, config.command)
    _emit(text, config.output)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser, _ = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        return _usage_error(e, e.command)
    config = CliConfig.from_args(args)
    logging.basicConfig(
        level=max(logging.WARNING - 10 * config.verbose, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
