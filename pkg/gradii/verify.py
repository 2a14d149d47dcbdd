"""Grid verification of the radius theorems and their supporting bounds.

Every check produces a :py:class:`VerificationReport` whose margin is
positive when the checked inequality holds. A check passes when its worst
margin exceeds ``-1e-9``. Checks of a property of a section inside a disk
that fail on the requested grid are repeated on a grid four times finer in
both directions before the failure is reported.

Suites bundle checks under a name (see :py:data:`SUITES`) and draw every
random member of G(alpha) from a single global seed.
"""
from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from typing import (Callable, Dict, Iterable, List, Optional, Sequence,
                    Tuple, Union)

import numpy as np

from gradii import bounds, classg, radii, series
from gradii.grid import DEFAULT_GRID, DiskGrid
from gradii.radii import RadiusProperty, RadiusQuery
from gradii.series import NormalizedSeries
from gradii.settings import suite_settings

#: A check passes when its worst margin is above minus this value.
PASS_TOLERANCE = 1.0e-9

#: A denominator with modulus below this value on the grid is a zero.
VANISHING_TOLERANCE = 1.0e-9

#: Margin reported by a check that fails because a denominator vanishes.
VANISHING_MARGIN = -1.0

#: Points where ``|f(z)|`` is below this value are skipped by ratio checks.
SKIP_TOLERANCE = 1.0e-12

#: Default global seed.
DEFAULT_SEED = 42

Witness = Union[complex, int, None]

logger = logging.getLogger(__name__)


def _jsonable(value):
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class VerificationReport:
    """Outcome of one check."""

    #: Identifier of the check, unique within a suite run.
    check_id: str

    #: True if the worst margin is above ``-PASS_TOLERANCE``.
    passed: bool

    #: Smallest margin found; positive means the inequality holds.
    worst_margin: float

    #: Grid point (complex) or index (int) where `worst_margin` occurs.
    witness: Witness = None

    #: Parameters of the check.
    parameters: dict = field(default_factory=dict)

    #: Free-text annotations.
    notes: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return _jsonable({
            "check_id": self.check_id,
            "passed": self.passed,
            "worst_margin": self.worst_margin,
            "witness": self.witness,
            "parameters": self.parameters,
            "notes": list(self.notes),
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def with_parameters(self, **parameters) -> VerificationReport:
        """Add `parameters` to the report and return it."""
        self.parameters = {**self.parameters, **parameters}
        return self


def _passes(margin: float) -> bool:
    return bool(margin > -PASS_TOLERANCE)


def _from_margins(check_id: str, margins: np.ndarray,
                  witnesses: Optional[np.ndarray],
                  parameters: dict,
                  notes: Sequence[str] = ()) -> VerificationReport:
    """Build a report from an array of margins and matching witnesses."""
    index = int(np.argmin(margins))
    worst = float(np.ravel(margins)[index])
    witness = None
    if witnesses is not None:
        witness = np.ravel(witnesses)[index]
        witness = complex(witness) if np.iscomplexobj(witnesses) \
            else int(witness)
    return VerificationReport(check_id, _passes(worst), worst, witness,
                              parameters, tuple(notes))


def combine(check_id: str, reports: Sequence[VerificationReport],
            parameters: Optional[dict] = None,
            notes: Sequence[str] = ()) -> VerificationReport:
    """Reduce several reports to one carrying the worst margin.

    The combined report passes only if every report passes. Its witness and
    parameters are those of the worst report, extended by `parameters`.
    """
    if not reports:
        raise ValueError(f"No reports to combine for {check_id}")
    worst = min(reports, key=lambda r: r.worst_margin)
    all_notes = sorted({n for r in reports for n in r.notes} | set(notes))
    return VerificationReport(
        check_id,
        all(r.passed for r in reports),
        worst.worst_margin,
        worst.witness,
        {**worst.parameters, **(parameters or {}),
         "case_count": len(reports)},
        tuple(all_notes)
    )


def _property_margins(sn: NormalizedSeries, points: np.ndarray,
                      prop: RadiusProperty,
                      beta: float) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """Margins of the order-beta criterion of `prop` at `points`.

    Returns the margins and the moduli of the criterion's denominator
    (None for close-to-convexity). Margins are ``-inf`` where the
    denominator vanishes.
    """
    derivative = series.differentiate(sn)
    if prop is RadiusProperty.CLOSE_TO_CONVEX_ORDER:
        return series.evaluate(derivative, points).real - beta, None
    if prop is RadiusProperty.CONVEX_ORDER:
        moduli = np.abs(series.evaluate(derivative, points))
        quotient = series.log_derivative_at
    else:
        moduli = np.abs(series.evaluate(sn, points))
        quotient = series.star_quotient_at
    keep = moduli >= VANISHING_TOLERANCE
    margins = np.full(np.shape(points), -np.inf)
    if np.any(keep):
        margins[keep] = np.real(quotient(sn, points[keep])) - beta
    return margins, moduli


def _sweep(prop: RadiusProperty, sn: NormalizedSeries, beta: float,
           grid: DiskGrid) -> Tuple[float, complex, bool]:
    points = grid.points()
    margins, moduli = _property_margins(sn, points, prop, beta)
    if moduli is not None and np.min(moduli) < VANISHING_TOLERANCE:
        index = int(np.argmin(moduli))
        return VANISHING_MARGIN, complex(np.ravel(points)[index]), True
    index = int(np.argmin(margins))
    return float(np.ravel(margins)[index]), \
        complex(np.ravel(points)[index]), False


def _check_order(prop: RadiusProperty, f: NormalizedSeries, n: int,
                 rho: float, beta: float, grid: Optional[DiskGrid],
                 check_id: Optional[str]) -> VerificationReport:
    if grid is None:
        grid = DEFAULT_GRID.with_radius(rho)
    if grid.max_radius > rho:
        raise ValueError(
            f"grid radius {grid.max_radius} exceeds the disk radius {rho}"
        )
    if check_id is None:
        check_id = f"{prop.value}/n={n}"
    sn = series.section(f, n, order=n)
    notes = []
    margin, witness, vanishing = _sweep(prop, sn, beta, grid)
    if not _passes(margin):
        logger.info("%s failed on %s; rerunning on a refined grid",
                    check_id, grid)
        grid = grid.refined()
        margin, witness, vanishing = _sweep(prop, sn, beta, grid)
        notes.append("rerun on refined grid")
    if vanishing:
        notes.append("vanishing")
    return VerificationReport(
        check_id, _passes(margin), margin, witness,
        {"property": prop.value, "n": n, "rho": rho, "beta": beta,
         "grid": grid.to_dict()},
        tuple(notes)
    )


def check_convex_order(f: NormalizedSeries, n: int, rho: float,
                       beta: float, grid: Optional[DiskGrid] = None,
                       check_id: Optional[str] = None
                       ) -> VerificationReport:
    """Check ``Re(1 + z s_n''/s_n') > beta`` and ``s_n' != 0`` on a grid
    of the disk of radius `rho`.

    Parameters
    ----------
    f : NormalizedSeries
    n : int
        Section degree.
    rho : float
        Radius of the disk.
    beta : float
        Order of convexity.
    grid : DiskGrid, optional
        Sampling grid with ``max_radius <= rho``. Defaults to 64 radii by
        256 angles up to `rho`.
    check_id : str, optional
    """
    return _check_order(RadiusProperty.CONVEX_ORDER, f, n, rho, beta,
                        grid, check_id)


def check_starlike_order(f: NormalizedSeries, n: int, rho: float,
                         beta: float, grid: Optional[DiskGrid] = None,
                         check_id: Optional[str] = None
                         ) -> VerificationReport:
    """Check ``Re(z s_n'/s_n) > beta`` and ``s_n != 0`` on a grid of the
    punctured disk of radius `rho`."""
    return _check_order(RadiusProperty.STARLIKE_ORDER, f, n, rho, beta,
                        grid, check_id)


def check_ctc_order(f: NormalizedSeries, n: int, rho: float,
                    beta: float, grid: Optional[DiskGrid] = None,
                    check_id: Optional[str] = None) -> VerificationReport:
    """Check ``Re(s_n') > beta`` on a grid of the disk of radius `rho`.

    This is close-to-convexity of order beta with respect to the identity.
    """
    return _check_order(RadiusProperty.CLOSE_TO_CONVEX_ORDER, f, n, rho,
                        beta, grid, check_id)


_CHECKS = {
    RadiusProperty.CONVEX_ORDER: check_convex_order,
    RadiusProperty.STARLIKE_ORDER: check_starlike_order,
    RadiusProperty.CLOSE_TO_CONVEX_ORDER: check_ctc_order,
}


def check_property(prop: RadiusProperty, f: NormalizedSeries, n: int,
                   rho: float, beta: float,
                   grid: Optional[DiskGrid] = None,
                   check_id: Optional[str] = None) -> VerificationReport:
    """Dispatch to the check of `prop`."""
    return _CHECKS[RadiusProperty(prop)](f, n, rho, beta, grid, check_id)


def empirical_property_radius(f: NormalizedSeries, n: int,
                              prop: RadiusProperty, beta: float = 0.0,
                              radial_step: float = 0.01,
                              angle_count: int = 256) -> float:
    """Largest scanned radius up to which ``s_n`` has the property.

    Circles of radius ``k radial_step`` are checked in order of increasing
    ``k`` up to the last radius below 1; the result is the radius of the
    last circle before the first failing one (0 if the first circle
    fails).
    """
    if not 0 < radial_step <= 0.01:
        raise ValueError(
            f"radial_step must be in (0, 0.01], got {radial_step}"
        )
    count = math.ceil(1 / radial_step - 1e-9) - 1
    grid = DiskGrid(count, angle_count, count * radial_step)
    margins, _ = _property_margins(series.section(f, n, order=n),
                                   grid.points(), RadiusProperty(prop), beta)
    failing = np.flatnonzero(np.any(margins <= -PASS_TOLERANCE, axis=1))
    circles = grid.radii()
    if failing.size == 0:
        return float(circles[-1])
    if failing[0] == 0:
        return 0.0
    return float(circles[failing[0] - 1])


def check_coefficient_bounds(f: NormalizedSeries, alpha: float,
                             check_id: str = "coeffs/member"
                             ) -> VerificationReport:
    """Check ``|a_k| <= alpha/(k(k-1))`` for every coefficient of `f`.

    The witness is the index ``k`` of the worst coefficient.
    """
    k = np.arange(2, f.order + 1)
    margins = alpha / (k * (k - 1)) - np.abs(f.coeffs[2:])
    return _from_margins(check_id, margins, k,
                         {"alpha": alpha, "order": f.order})


def coefficient_bound_suite(alpha: float, seed_count: int = 100,
                            order: int = 32, seed: int = DEFAULT_SEED
                            ) -> VerificationReport:
    """Check the coefficient bound on `seed_count` random members."""
    reports = [
        check_coefficient_bounds(
            f, alpha, f"coeffs/alpha={alpha}"
        ).with_parameters(member_seed=member_seed)
        for member_seed, f in classg.random_members(alpha, seed, seed_count,
                                                    order)
    ]
    return combine(f"coeffs/alpha={alpha}", reports,
                   {"alpha": alpha, "seed": seed, "seed_count": seed_count,
                    "order": order})


def extremal_attainment_report(alphas: Iterable[float],
                               sections: Iterable[int],
                               order: int = 32) -> VerificationReport:
    """Check that each extremal function attains its coefficient bound.

    The margin is ``1e-12`` minus the largest deviation from equality.
    """
    alphas = list(alphas)
    sections = list(sections)
    deviations = []
    labels = []
    for alpha in alphas:
        for n in sections:
            f = classg.extremal_function(alpha, n, order)
            deviations.append(abs(abs(f.coefficient(n))
                                  - classg.coefficient_bound(alpha, n)))
            labels.append(n)
    return _from_margins("coeffs/extremal", 1e-12 - np.array(deviations),
                         np.array(labels), {"alphas": alphas, "order": order})


def membership_report(alpha: float, seed_count: int,
                      seed: int = DEFAULT_SEED,
                      grid: DiskGrid = DEFAULT_GRID) -> VerificationReport:
    """Check the defining inequality of G(alpha) on random members."""
    reports = []
    for member_seed, f in classg.random_members(
            alpha, seed, seed_count, classg.MEMBERSHIP_ORDER):
        margin = -classg.membership_margin(f, alpha, grid)
        reports.append(VerificationReport(
            f"membership/alpha={alpha}", _passes(margin), margin, None,
            {"member_seed": member_seed}
        ))
    return combine(f"coeffs/membership/alpha={alpha}", reports,
                   {"alpha": alpha, "grid": grid.to_dict(),
                    "order": classg.MEMBERSHIP_ORDER},
                   notes=("sampled condition only",))


def _tail_margins(f: NormalizedSeries, n: int, alpha: float,
                  grid: DiskGrid) -> Dict[str, Tuple[np.ndarray, np.ndarray]]:
    points = grid.points()
    radii_ = grid.radii()[:, np.newaxis]
    tail = series.tail(f, n)
    derivative = series.differentiate(tail)
    second = series.differentiate(derivative)
    checks = {
        "sigma": (tail, bounds.tail_abs_bound),
        "sigma1": (derivative, bounds.tail_deriv_bound),
        "sigma2": (second, bounds.tail_second_deriv_bound),
    }
    margins = {}
    for name, (s, bound) in checks.items():
        limit = np.array([bound(alpha, r) for r in radii_.ravel()])
        margins[name] = (limit[:, np.newaxis]
                         - np.abs(series.evaluate(s, points)), points)
    return margins


def tail_bound_suite(alpha: float, seed_count: int = 20,
                     sections: Iterable[int] = range(2, 13),
                     grid: DiskGrid = DiskGrid(9, 256, 0.9),
                     order: int = 128, seed: int = DEFAULT_SEED
                     ) -> List[VerificationReport]:
    """Check ``|sigma_n|``, ``|sigma_n'|`` and ``|sigma_n''|`` against
    their bounds for random members of G(alpha).

    Returns one report per tail quantity.
    """
    per_quantity: Dict[str, List[VerificationReport]] = {}
    sections = list(sections)
    for member_seed, f in classg.random_members(alpha, seed, seed_count,
                                                order):
        for n in sections:
            for name, (margins, points) in _tail_margins(
                    f, n, alpha, grid).items():
                per_quantity.setdefault(name, []).append(_from_margins(
                    name, margins, points,
                    {"member_seed": member_seed, "n": n}
                ))
    return [
        combine(f"tails/alpha={alpha}/{name}", reports,
                {"alpha": alpha, "seed": seed, "grid": grid.to_dict()})
        for name, reports in sorted(per_quantity.items())
    ]


def distortion_margins(f: NormalizedSeries, alpha: float,
                       grid: DiskGrid) -> Dict[str, np.ndarray]:
    """Margins of the growth and distortion bounds of G(alpha) at the
    points of `grid`.

    ==========  ===============================================
    curvature   ``|z f''/(alpha f') - c| <= r/(1-r^2)``
    deriv       ``|f'(z)| >= (1-r)^alpha``
    quotient    ``|f(z)/z| >= (1-(1-r)^(1+alpha))/((1+alpha) r)``
    starlike    ``Re(z f'/f) >= (1+alpha)(1-r)/(1+alpha-r)``
    ==========  ===============================================

    with ``c = -r^2/(1-r^2)`` the center of
    :py:func:`gradii.bounds.curvature_disk`.
    """
    points = grid.points()
    radii_ = grid.radii()
    disks = np.array([bounds.curvature_disk(r) for r in radii_])
    center, radius = disks[:, :1], disks[:, 1:]

    def limit(bound):
        return np.array([bound(alpha, r) for r in radii_])[:, np.newaxis]

    curvature = (series.log_derivative_at(f, points) - 1) / alpha
    derivative = series.evaluate(series.differentiate(f), points)
    return {
        "curvature": radius - np.abs(curvature - center),
        "deriv": np.abs(derivative) - limit(bounds.deriv_lower_bound),
        "quotient": (np.abs(series.evaluate(f, points) / points)
                     - limit(bounds.quotient_lower_bound)),
        "starlike": (np.real(series.star_quotient_at(f, points))
                     - limit(bounds.starlike_lower_bound)),
    }


def distortion_suite(alpha: float, seed_count: int = 20,
                     grid: DiskGrid = DiskGrid(9, 256, 0.9),
                     order: int = classg.MEMBERSHIP_ORDER,
                     seed: int = DEFAULT_SEED) -> List[VerificationReport]:
    """Check the growth and distortion bounds on random members of
    G(alpha), one report per bound.

    Single-atom members attain the curvature bound on every circle, so
    `order` must keep the truncation error far below the pass tolerance.
    """
    per_bound: Dict[str, List[VerificationReport]] = {}
    points = grid.points()
    for member_seed, f in classg.random_members(alpha, seed, seed_count,
                                                order):
        for name, margins in distortion_margins(f, alpha, grid).items():
            per_bound.setdefault(name, []).append(_from_margins(
                name, margins, points, {"member_seed": member_seed}
            ))
    return [
        combine(f"distortion/alpha={alpha}/{name}", reports,
                {"alpha": alpha, "seed": seed, "order": order,
                 "grid": grid.to_dict()})
        for name, reports in sorted(per_bound.items())
    ]


def rogosinski_suite(f: NormalizedSeries, order: int = 32,
                     check_id: str = "rogosinski/member"
                     ) -> VerificationReport:
    """Check the bounds on the coefficients ``b_k`` of ``z/f`` for f in G(1).

    Checks ``sum_{k<=n} |b_k|^2 <= (1 - 4^-n)/3`` for every ``n <= order``
    and ``|b_k| <= 1/sqrt(3)``. The witness is the worst index.
    """
    b = series.reciprocal_z_over_f(f, order).coeffs[1:]
    n = np.arange(1, order + 1)
    partial = np.cumsum(np.abs(b) ** 2)
    margins = np.minimum((1 - 4.0 ** -n) / 3 - partial,
                         1 / math.sqrt(3) - np.abs(b))
    return _from_margins(check_id, margins, n, {"order": order})


def section_ratio_suite(f: NormalizedSeries, n: int,
                        grid: DiskGrid = DiskGrid(9, 256, 0.9),
                        check_id: Optional[str] = None
                        ) -> VerificationReport:
    """Check ``|s_n/f - 1| <= |z|^n (1/(n(n+1)) + 2|z|/(sqrt 3 (1-|z|)))``
    on a grid, for f in G(1)."""
    points = grid.points()
    fz = series.evaluate(f, points)
    sn = series.evaluate(series.section(f, n), points)
    keep = np.abs(fz) >= SKIP_TOLERANCE
    skipped = int(np.count_nonzero(~keep))
    if skipped:
        logger.debug("skipping %d point(s) where f vanishes", skipped)
    limit = np.array([bounds.section_ratio_bound(n, r)
                      for r in grid.radii()])[:, np.newaxis]
    ratio = np.abs(sn / np.where(keep, fz, 1.0) - 1)
    margins = np.where(keep, limit - ratio, np.inf)
    return _from_margins(check_id or f"sections/n={n}", margins, points,
                         {"n": n, "grid": grid.to_dict(), "skipped": skipped})


@dataclass(frozen=True)
class MonotonicityTarget:
    """A claimed negative partial derivative of an auxiliary curve."""

    #: Curve index, 1 to 11.
    index: int

    #: ``"alpha"`` or ``"beta"`` for the beta curves, ``"alpha"`` for the
    #: radius curves.
    parameter: str

    #: Values of alpha on the grid.
    alphas: Tuple[float, ...]

    #: Values of the second argument (beta or rho) on the grid.
    xs: Tuple[float, ...]

    def __post_init__(self):
        if self.parameter not in ("alpha", "beta"):
            raise ValueError(
                f"parameter must be 'alpha' or 'beta', got {self.parameter}"
            )
        if self.parameter == "beta" and self.index not in radii.BETA_CURVES:
            raise ValueError(f"curve {self.index} does not depend on beta")


#: Curves whose monotonicity is argued only from their graphs.
GRAPHICAL_CURVES = frozenset({2, 6})


def default_monotonicity_targets() -> List[MonotonicityTarget]:
    settings = suite_settings("monotonicity")
    alphas = tuple(settings["alphas"])
    rhos = tuple(settings["rhos"])
    targets = [MonotonicityTarget(i, "beta", alphas, tuple(settings["betas"]))
               for i in sorted(radii.BETA_CURVES)]
    for i in (3, 4, 7, 8, 11):
        xs = rhos if i != 4 else tuple(
            r for r in rhos if r <= settings["psi4_max_rho"]
        )
        targets.append(MonotonicityTarget(i, "alpha", alphas, xs))
    return targets


def check_monotonicity(target: MonotonicityTarget,
                       step: float = 1.0e-5) -> VerificationReport:
    """Check by central differences that the curve decreases in the target
    parameter at every grid point.

    The margin is minus the difference quotient.
    """
    alpha, x = np.meshgrid(np.asarray(target.alphas, dtype=float),
                           np.asarray(target.xs, dtype=float),
                           indexing="ij")
    if target.parameter == "beta":
        forward = radii.aux_psi(target.index, alpha, x + step)
        backward = radii.aux_psi(target.index, alpha, x - step)
    else:
        forward = radii.aux_psi(target.index, alpha + step, x)
        backward = radii.aux_psi(target.index, alpha - step, x)
    margins = -(forward - backward) / (2 * step)
    index = int(np.argmin(margins))
    notes = ("sign argued graphically",) \
        if target.index in GRAPHICAL_CURVES else ()
    worst = float(margins.ravel()[index])
    return VerificationReport(
        f"monotonicity/psi{target.index:02d}/{target.parameter}",
        _passes(worst), worst, None,
        {"alpha": float(alpha.ravel()[index]),
         "x": float(x.ravel()[index]),
         "step": step},
        notes
    )


def monotonicity_suite(targets: Optional[Sequence[MonotonicityTarget]] = None,
                       step: float = 1.0e-5) -> List[VerificationReport]:
    """Check every target (by default all eleven curves)."""
    if targets is None:
        targets = default_monotonicity_targets()
    return [check_monotonicity(t, step) for t in targets]


def _decrease_report(check_id: str, values: Sequence[float],
                     first: int) -> VerificationReport:
    """Strict decrease: every relative step must be positive, with no
    tolerance."""
    values = np.asarray(values, dtype=float)
    margins = (values[:-1] - values[1:]) / np.abs(values[:-1])
    report = _from_margins(check_id, margins,
                           np.arange(first, first + margins.size),
                           {"first": first, "last": first + values.size - 1})
    report.passed = bool(report.worst_margin > 0)
    return report


def sequence_monotonicity_suite(last: int = 50,
                                rhos: Sequence[float] = tuple(
                                    k / 10 for k in range(1, 10))
                                ) -> List[VerificationReport]:
    """S_1 and S_2 are strictly decreasing in n and agree with their closed
    forms at n = 2."""
    reports = []
    for name, sequence, closed_form in (
            ("S1", bounds.s1_value,
             lambda r: (1 - r) * math.log1p(-r) + r - r ** 2 / 2),
            ("S2", bounds.s2_value,
             lambda r: -math.log1p(-r) - r)):
        decreasing = []
        errors = []
        for rho in rhos:
            decreasing.append(_decrease_report(
                f"sequences/{name}",
                [sequence(n, rho) for n in range(2, last + 2)], 2
            ).with_parameters(rho=rho))
            errors.append(abs(sequence(2, rho) - closed_form(rho)))
        reports.append(combine(f"sequences/{name}/decreasing", decreasing,
                               {"rhos": list(rhos)}))
        reports.append(_from_margins(
            f"sequences/{name}/closed-form", 1e-10 - np.array(errors),
            None, {"rhos": list(rhos), "n": 2}
        ))
    return reports


def _equality_report(check_id: str, found: int,
                     expected: int) -> VerificationReport:
    margin = -float(abs(found - expected))
    return VerificationReport(check_id, _passes(margin), margin, found,
                              {"expected": expected})


def threshold_suite(ctc: int = 17, starlike: int = 10,
                    fig3_last: int = 40, fig3_flat_from: int = 17,
                    fig3_flat_tolerance: float = 1.0e-3
                    ) -> List[VerificationReport]:
    """Thresholds, their crossing witnesses, the printed constants and the
    coefficient radius of the partial sums."""
    reports = [
        _equality_report("thresholds/ctc", bounds.threshold_ctc(), ctc),
        _equality_report("thresholds/starlike", bounds.threshold_starlike(),
                         starlike),
    ]

    budget = math.sin(math.radians(
        bounds.PRINTED_CONSTANTS["ctc_budget_deg"]))
    before = bounds.c_n(ctc - 1)
    reports.append(VerificationReport(
        "thresholds/ctc/crossing", _passes(before - budget), before - budget,
        ctc - 1, {"C": before, "sin_budget": budget}
    ))
    before = bounds.e_n(starlike - 1)
    reports.append(VerificationReport(
        "thresholds/starlike/crossing", _passes(before - 1), before - 1,
        starlike - 1, {"E": before}
    ))

    for check in bounds.constant_crosschecks():
        margin = check.tolerance - abs(check.difference)
        if not check.agrees:
            margin = min(margin, -check.tolerance)
        reports.append(VerificationReport(
            f"thresholds/constants/{check.name}", _passes(margin), margin,
            None, check.to_dict(),
            () if check.agrees else ("printed value disagrees",)
        ))

    recomputed_ctc = bounds.threshold_ctc(
        bounds.ratio_constant(bounds.CTC_RADIUS))
    recomputed_starlike = bounds.threshold_starlike(
        bounds.ratio_constant(bounds.STARLIKE_RADIUS),
        2 * bounds.STARLIKE_RADIUS
        / (math.sqrt(3) * (1 - bounds.STARLIKE_RADIUS))
    )
    reports.append(_equality_report("thresholds/ctc/recomputed",
                                    recomputed_ctc, ctc))
    reports.append(_equality_report("thresholds/starlike/recomputed",
                                    recomputed_starlike, starlike))

    for name in ("C", "E", "F"):
        sequence = bounds.BoundSequence(name)
        reports.append(_decrease_report(
            f"thresholds/{name}/decreasing", sequence.values(2, fig3_last), 2
        ))

    sections = np.arange(2, fig3_last + 1)
    fig3 = np.array([bounds.fig3_radius(int(n)) for n in sections])
    limit = -math.expm1(-1.0)
    flat = sections >= fig3_flat_from
    margins = np.concatenate([
        fig3[:-1] - fig3[1:],
        fig3 - (limit - 1e-12),
        fig3_flat_tolerance - np.abs(fig3[flat] - bounds.CTC_RADIUS),
    ])
    witnesses = np.concatenate([sections[1:], sections, sections[flat]])
    reports.append(_from_margins(
        "thresholds/fig3", margins, witnesses,
        {"last": fig3_last, "flat_from": fig3_flat_from}
    ))
    return reports


def section_radius_suite(prop: RadiusProperty, alpha: float, beta: float,
                         members: Sequence[Tuple[str, NormalizedSeries]],
                         sections: Iterable[int],
                         radial_step: float = 0.01, slack: float = 0.01,
                         check_id: Optional[str] = None
                         ) -> List[VerificationReport]:
    """Check the sections of `members` at the radius of `prop` of order
    `beta` for G(`alpha`), and compare their empirical radii with it.

    Returns the ``empirical`` report (every empirical radius is at least
    the theoretical one less `slack`) and the ``sections`` report (every
    section has the property on the disk of the theoretical radius).
    """
    prop = RadiusProperty(prop)
    rho = radii.radius_of_property(RadiusQuery(alpha, beta, prop)).rho
    grid_settings = suite_settings("grid")
    grid = DiskGrid(grid_settings["radius_count"],
                    grid_settings["angle_count"], rho)
    floor = rho - slack
    sections = list(sections)
    empirical = []
    checks = []
    for label, f in members:
        for n in sections:
            r = empirical_property_radius(f, n, prop, beta, radial_step)
            empirical.append(VerificationReport(
                "empirical", _passes(r - floor), r - floor, None,
                {"member": label, "n": n, "empirical_radius": r}
            ))
            checks.append(check_property(
                prop, f, n, rho, beta, grid
            ).with_parameters(member=label))
    if check_id is None:
        check_id = f"radii/{prop.value}/alpha={alpha}/beta={beta}"
    parameters = {"alpha": alpha, "beta": beta, "radius": rho}
    return [
        combine(f"{check_id}/empirical", empirical,
                {**parameters, "floor": floor, "radial_step": radial_step}),
        combine(f"{check_id}/sections", checks, parameters),
    ]


def _radius_members(alpha: float, seed: int, seed_count: int,
                    settings: dict) -> List[Tuple[str, NormalizedSeries]]:
    members = [(f"extremal/n={m}", classg.extremal_function(
        alpha, m, settings["order"])) for m in settings["extremal_sections"]]
    members.extend(
        (f"seed={member_seed}", f) for member_seed, f in
        classg.random_members(alpha, seed, seed_count, settings["order"])
    )
    return members


def _coeffs(seed: int) -> List[VerificationReport]:
    settings = suite_settings("coeffs")
    reports = [coefficient_bound_suite(alpha, settings["seed_count"],
                                       settings["order"], seed)
               for alpha in settings["alphas"]]
    reports.append(extremal_attainment_report(
        settings["alphas"], settings["extremal_sections"], settings["order"]
    ))
    reports.extend(membership_report(alpha,
                                     settings["membership_seed_count"], seed)
                   for alpha in settings["alphas"])
    return reports


def _tails(seed: int) -> List[VerificationReport]:
    settings = suite_settings("tails")
    grid = DiskGrid.from_dict(settings["grid"])
    reports = []
    for alpha in settings["alphas"]:
        reports.extend(tail_bound_suite(alpha, settings["seed_count"],
                                        settings["sections"], grid,
                                        settings["order"], seed))
    return reports


def _distortion(seed: int) -> List[VerificationReport]:
    settings = suite_settings("distortion")
    grid = DiskGrid.from_dict(settings["grid"])
    reports = []
    for alpha in settings["alphas"]:
        reports.extend(distortion_suite(alpha, settings["seed_count"], grid,
                                        settings["order"], seed))
    return reports


def _sections(seed: int) -> List[VerificationReport]:
    settings = suite_settings("sections")
    grid = DiskGrid.from_dict(settings["grid"])
    members = [(f"extremal/n={m}",
                classg.extremal_function(1.0, m, settings["order"]))
               for m in settings["sections"]]
    members.extend(
        (f"seed={member_seed}", f) for member_seed, f in
        classg.random_members(1.0, seed, settings["seed_count"],
                              settings["order"])
    )
    reports = []
    for n in settings["sections"]:
        cases = [section_ratio_suite(f, n, grid).with_parameters(member=label)
                 for label, f in members]
        reports.append(combine(f"sections/n={n}", cases, {"seed": seed}))
    return reports


def _rogosinski(seed: int) -> List[VerificationReport]:
    settings = suite_settings("rogosinski")
    order = settings["order"]
    reports = [
        rogosinski_suite(series.identity(order + 1), order,
                         "rogosinski/identity"),
        rogosinski_suite(classg.extremal_function(1.0, 2, order + 1), order,
                         "rogosinski/extremal"),
    ]
    members = [
        rogosinski_suite(f, order).with_parameters(member_seed=member_seed)
        for member_seed, f in classg.random_members(
            1.0, seed, settings["seed_count"], 2 * order)
    ]
    reports.append(combine("rogosinski/random", members, {"seed": seed}))
    return reports


def _radii(seed: int) -> List[VerificationReport]:
    settings = suite_settings("radii")
    classical = radii.classical_constants()
    expected = {
        RadiusProperty.CONVEX_ORDER: classical.rho_convex,
        RadiusProperty.STARLIKE_ORDER: classical.rho_starlike,
        RadiusProperty.CLOSE_TO_CONVEX_ORDER: classical.rho_ctc,
    }
    printed = {
        RadiusProperty.CONVEX_ORDER: 0.3578,
        RadiusProperty.STARLIKE_ORDER: 0.5698,
        RadiusProperty.CLOSE_TO_CONVEX_ORDER: 0.6321,
    }
    reports = []
    for prop in RadiusProperty:
        result = radii.radius_of_property(RadiusQuery(1.0, 0.0, prop))
        reports.append(_from_margins(
            f"radii/{prop.value}/classical",
            np.array([1e-9 - abs(result.rho - expected[prop]),
                      5e-4 - abs(result.rho - printed[prop])]),
            None, {"rho": result.rho, "converged": result.converged}
        ))
        reports.append(_radius_monotonicity(prop, settings["alphas"],
                                            settings["betas"]))

    members = _radius_members(1.0, seed, settings["seed_count"], settings)
    for prop in RadiusProperty:
        reports.extend(section_radius_suite(
            prop, 1.0, 0.0, members, settings["sections"],
            settings["radial_step"], settings["slack"],
            check_id=f"radii/{prop.value}"
        ))

    for alpha in settings["order_alphas"]:
        members = _radius_members(alpha, seed, settings["order_seed_count"],
                                  settings)
        for beta in settings["order_betas"]:
            for prop in RadiusProperty:
                reports.extend(section_radius_suite(
                    prop, alpha, beta, members, settings["order_sections"],
                    settings["radial_step"], settings["slack"]
                ))

    ctc_members = list(classg.random_members(
        1.0, seed, settings["seed_count"], settings["ctc_order"]))
    for name, sections, notes in (
            ("large-n", settings["ctc_sections"], ()),
            ("small-n", settings["ctc_loose_sections"],
             ("bound not tight here",))):
        cases = [
            check_ctc_order(f, n, bounds.CTC_RADIUS, 0.0).with_parameters(
                member_seed=member_seed)
            for member_seed, f in ctc_members for n in sections
        ]
        reports.append(combine(f"radii/ctc/0.6321/{name}", cases,
                               {"sections": list(sections)}, notes))
    return reports


def _radius_monotonicity(prop: RadiusProperty, alphas: Sequence[float],
                         betas: Sequence[float]) -> VerificationReport:
    table = np.array([[radii.radius_of_property(
        RadiusQuery(a, b, prop)).rho for b in betas] for a in alphas])
    margins = np.concatenate([
        (table[:, :-1] - table[:, 1:]).ravel(),
        (table[:-1, :] - table[1:, :]).ravel(),
    ])
    return _from_margins(f"radii/{prop.value}/monotone", margins, None,
                         {"alphas": list(alphas), "betas": list(betas)})


def _monotonicity(seed: int) -> List[VerificationReport]:
    return monotonicity_suite(step=suite_settings("monotonicity")["step"])


def _thresholds(seed: int) -> List[VerificationReport]:
    settings = suite_settings("thresholds")
    return sequence_monotonicity_suite() + threshold_suite(
        settings["ctc"], settings["starlike"],
        settings["fig3_last_section"], settings["fig3_flat_from"],
        settings["fig3_flat_tolerance"]
    )


#: Suites run by :py:func:`run_suites`, by name.
SUITES: Dict[str, Callable[[int], List[VerificationReport]]] = {
    "coeffs": _coeffs,
    "radii": _radii,
    "tails": _tails,
    "distortion": _distortion,
    "sections": _sections,
    "rogosinski": _rogosinski,
    "monotonicity": _monotonicity,
    "thresholds": _thresholds,
}


def run_suites(names: Iterable[str] = ("all",),
               seed: int = DEFAULT_SEED) -> List[VerificationReport]:
    """Run the named suites and return their reports sorted by check id.

    Parameters
    ----------
    names : Iterable of str
        Suite names from :py:data:`SUITES`, or ``"all"``.
    seed : int
        Global seed for every random member.

    Raises
    ------
    ValueError
        If a name is not a known suite.
    """
    selected = []
    for name in names:
        if name == "all":
            selected.extend(SUITES)
        elif name in SUITES:
            selected.append(name)
        else:
            raise ValueError(
                f"Unknown suite '{name}'; choose from "
                f"{', '.join(['all', *SUITES])}"
            )
    reports = []
    for name in dict.fromkeys(selected):
        logger.info("running suite %s (seed %d)", name, seed)
        suite_reports = SUITES[name](seed)
        failed = sum(not r.passed for r in suite_reports)
        logger.info("suite %s: %d check(s), %d failed",
                    name, len(suite_reports), failed)
        reports.extend(suite_reports)
    return sorted(reports, key=lambda r: r.check_id)
