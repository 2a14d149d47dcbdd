"""Explicit bounds on tails, sections and their quotients.

All bounds are for a member ``f`` of G(alpha) and its tail
``sigma_n = f - s_n``, evaluated on the circle ``|z| = rho``. The
sequences ``C_n``, ``E_n`` and ``F_n`` and the section-count thresholds
derived from them are only stated for G(1).
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import asdict, dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np
import scipy.optimize

from gradii.radii import RHO_MAX, RadiusProperty

#: Coefficient of the section-derivative ratio bound.
SECTION_RATIO_CONSTANT = math.pi / math.sqrt(6) + 1

#: Outer radius at which the section-derivative ratio bound is applied.
OUTER_RADIUS = 4 / 5

#: Radius (4 digits) on which ``Re s_n' > 0`` is claimed for large n.
CTC_RADIUS = 0.6321

#: Radius (4 digits) on which ``s_n`` is claimed starlike for large n.
STARLIKE_RADIUS = 0.5698

#: Constants as printed with the threshold theorems.
PRINTED_CONSTANTS = {
    "C": 42.09795334,
    "E": 27.67852953,
    "F": 1.529401131,
    "arg_fprime_deg": 39.206,
    "ctc_budget_deg": 50.794,
    "arg_starlike_deg": 19.88378,
    "starlike_budget_deg": 70.116271,
}

#: Tails are summed until the remainder bound drops below this value.
SUMMATION_TOLERANCE = 1.0e-16

_CHUNK = 1024
_MAX_TERMS = 1 << 22

#: Largest n examined by the threshold scans.
MAX_SECTION = 1000

logger = logging.getLogger(__name__)


def _check_rho(rho: float):
    if not 0 <= rho <= RHO_MAX:
        raise ValueError(f"rho must be in [0, {RHO_MAX}], got {rho}")


def tail_abs_bound(alpha: float, rho: float) -> float:
    """Bound ``alpha((1-rho) ln(1-rho) + rho - rho^2/2)`` on
    ``|sigma_n(z)|``."""
    _check_rho(rho)
    return alpha * ((1 - rho) * math.log1p(-rho) + rho - rho ** 2 / 2)


def tail_deriv_bound(alpha: float, rho: float) -> float:
    """Bound ``-alpha(ln(1-rho) + rho)`` on ``|sigma_n'(z)|``."""
    _check_rho(rho)
    return -alpha * (math.log1p(-rho) + rho)


def tail_second_deriv_bound(alpha: float, rho: float) -> float:
    """Bound ``alpha rho/(1-rho)`` on ``|sigma_n''(z)|``."""
    _check_rho(rho)
    return alpha * rho / (1 - rho)


def curvature_disk(rho: float) -> Tuple[float, float]:
    """Center and radius of the disk that contains ``z f''/(alpha f')``
    on ``|z| = rho``.

    The disk is the image of ``|w| <= rho`` under ``-w/(1-w)``: center
    ``-rho^2/(1-rho^2)`` and radius ``rho/(1-rho^2)``. Single-atom members
    attain its boundary on the whole circle.
    """
    _check_rho(rho)
    scale = 1 / (1 - rho ** 2)
    return -rho ** 2 * scale, rho * scale


def deriv_lower_bound(alpha: float, rho: float) -> float:
    """Lower bound ``(1-rho)^alpha`` on ``|f'(z)|``."""
    _check_rho(rho)
    return math.exp(alpha * math.log1p(-rho))


def quotient_lower_bound(alpha: float, rho: float) -> float:
    """Lower bound ``(1 - (1-rho)^(1+alpha))/((1+alpha) rho)`` on
    ``|f(z)/z|``, with the value 1 at ``rho = 0``."""
    _check_rho(rho)
    if rho == 0:
        return 1.0
    return -math.expm1((1 + alpha) * math.log1p(-rho)) / ((1 + alpha) * rho)


def starlike_lower_bound(alpha: float, rho: float) -> float:
    """Lower bound ``(1+alpha)(1-rho)/(1+alpha-rho)`` on
    ``Re(z f'(z)/f(z))``."""
    _check_rho(rho)
    return (1 + alpha) * (1 - rho) / (1 + alpha - rho)


def _tail_sum(term: Callable[[np.ndarray], np.ndarray],
              remainder: Callable[[int], float],
              start: int) -> float:
    """Sum ``term(k)`` for ``k >= start`` until ``remainder(K)``, a bound
    on the terms beyond ``K``, is below the summation tolerance."""
    total = 0.0
    k = start
    while True:
        total += float(np.sum(term(np.arange(k, k + _CHUNK, dtype=float))))
        k += _CHUNK
        if remainder(k - 1) < SUMMATION_TOLERANCE:
            return total
        if k - start > _MAX_TERMS:
            raise ValueError("tail sum did not reach tolerance; rho is too "
                             "close to 1")


def s1_value(n: int, rho: float) -> float:
    """``S_1(n, rho) = sum_{k > n} rho^k/(k(k-1))``."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 0 <= rho < 1:
        raise ValueError(f"rho must be in [0, 1), got {rho}")
    return _tail_sum(
        lambda k: rho ** k / (k * (k - 1)),
        lambda last: rho ** (last + 1) / ((1 - rho) * (last + 1) * last),
        n + 1
    )


def s2_value(n: int, rho: float) -> float:
    """``S_2(n, rho) = sum_{k >= n} rho^k/k``."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 0 <= rho < 1:
        raise ValueError(f"rho must be in [0, 1), got {rho}")
    return _tail_sum(
        lambda k: rho ** k / k,
        lambda last: rho ** (last + 1) / ((1 - rho) * (last + 1)),
        n
    )


def section_deriv_ratio_bound(n: int, rho_outer: float,
                              z_abs: float) -> float:
    """Bound on ``|s_n'(z)/f'(z) - 1|`` for f in G(1).

    The bound is

        |z|^n (1/n + K |z| sqrt(2 rho - rho^2)/(rho^n (1-rho)(rho-|z|)))

    with ``K = pi/sqrt(6) + 1``, valid for ``|z| < rho < 1``.

    Raises
    ------
    ValueError
        If `z_abs` is not below `rho_outer`.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 0 < rho_outer < 1:
        raise ValueError(f"rho_outer must be in (0, 1), got {rho_outer}")
    if not 0 <= z_abs < rho_outer:
        raise ValueError(
            f"z_abs must be in [0, rho_outer), got {z_abs} with "
            f"rho_outer = {rho_outer}"
        )
    growth = (SECTION_RATIO_CONSTANT * z_abs
              * math.sqrt(2 * rho_outer - rho_outer ** 2)
              / (rho_outer ** n * (1 - rho_outer) * (rho_outer - z_abs)))
    return z_abs ** n * (1 / n + growth)


def section_ratio_bound(n: int, z_abs: float) -> float:
    """Bound ``|z|^n (1/(n(n+1)) + 2|z|/(sqrt(3)(1-|z|)))`` on
    ``|s_n(z)/f(z) - 1|`` for f in G(1)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 0 <= z_abs < 1:
        raise ValueError(f"z_abs must be in [0, 1), got {z_abs}")
    return z_abs ** n * (1 / (n * (n + 1))
                         + 2 * z_abs / (math.sqrt(3) * (1 - z_abs)))


def ratio_constant(z_abs: float, rho_outer: float = OUTER_RADIUS) -> float:
    """The constant multiplying ``(1/rho_outer)^n`` in
    :py:func:`section_deriv_ratio_bound`."""
    return (SECTION_RATIO_CONSTANT * z_abs
            * math.sqrt(2 * rho_outer - rho_outer ** 2)
            / ((1 - rho_outer) * (rho_outer - z_abs)))


def _check_index(n: int):
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")


def c_n(n: int, constant: float = PRINTED_CONSTANTS["C"]) -> float:
    """``C_n = 0.6321^n (1/n + (5/4)^n C)``."""
    _check_index(n)
    return CTC_RADIUS ** n * (1 / n + (1 / OUTER_RADIUS) ** n * constant)


def e_n(n: int, constant: float = PRINTED_CONSTANTS["E"]) -> float:
    """``E_n = 0.5698^n (1/n + (5/4)^n E)``."""
    _check_index(n)
    return STARLIKE_RADIUS ** n * (1 / n
                                   + (1 / OUTER_RADIUS) ** n * constant)


def f_n(n: int, constant: float = PRINTED_CONSTANTS["F"]) -> float:
    """``F_n = 0.5698^n (1/(n(n+1)) + F)``."""
    _check_index(n)
    return STARLIKE_RADIUS ** n * (1 / (n * (n + 1)) + constant)


@enum.unique
class SequenceId(str, enum.Enum):
    S1 = "S1"
    S2 = "S2"
    C = "C"
    E = "E"
    F = "F"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BoundSequence:
    """One of the bound sequences, indexed by the section degree n."""

    #: Which sequence.
    id: SequenceId

    #: Radius for S1 and S2; unused by C, E and F.
    rho: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "id", SequenceId(self.id))
        if self.id in (SequenceId.S1, SequenceId.S2):
            if self.rho is None or not 0 <= self.rho < 1:
                raise ValueError(
                    f"{self.id} needs rho in [0, 1), got {self.rho}"
                )

    def value(self, n: int) -> float:
        if self.id is SequenceId.S1:
            return s1_value(n, self.rho)
        if self.id is SequenceId.S2:
            return s2_value(n, self.rho)
        return {SequenceId.C: c_n,
                SequenceId.E: e_n,
                SequenceId.F: f_n}[self.id](n)

    def values(self, first: int, last: int) -> List[float]:
        """Values for ``n = first, ..., last``."""
        return [self.value(n) for n in range(first, last + 1)]


def arcsin_degrees(x: float) -> float:
    """Arcsine in degrees; NaN when ``x > 1``."""
    if x > 1:
        return math.nan
    return math.degrees(math.asin(x))


def _first_section(accept: Callable[[int], bool]) -> int:
    for n in range(2, MAX_SECTION + 1):
        if accept(n):
            return n
    raise RuntimeError(f"no section degree up to {MAX_SECTION} qualifies")


def ctc_accepts(n: int, constant: float = PRINTED_CONSTANTS["C"]) -> bool:
    """True if ``arcsin(C_n) < 50.794`` degrees."""
    return arcsin_degrees(c_n(n, constant)) \
        < PRINTED_CONSTANTS["ctc_budget_deg"]


def starlike_angle(n: int, e_constant: float = PRINTED_CONSTANTS["E"],
                   f_constant: float = PRINTED_CONSTANTS["F"]) -> float:
    """``arcsin(E_n) + arcsin(F_n)`` in degrees (NaN if undefined)."""
    return arcsin_degrees(e_n(n, e_constant)) \
        + arcsin_degrees(f_n(n, f_constant))


def starlike_accepts(n: int, e_constant: float = PRINTED_CONSTANTS["E"],
                     f_constant: float = PRINTED_CONSTANTS["F"]) -> bool:
    """True if ``arcsin(E_n) + arcsin(F_n) < 70.116271`` degrees."""
    return starlike_angle(n, e_constant, f_constant) \
        < PRINTED_CONSTANTS["starlike_budget_deg"]


def threshold_ctc(constant: float = PRINTED_CONSTANTS["C"]) -> int:
    """Least n for which ``Re s_n' > 0`` on ``|z| <= 0.6321`` follows from
    the ``C_n`` argument."""
    n = _first_section(lambda k: ctc_accepts(k, constant))
    logger.debug("ctc threshold %d (C_n = %g)", n, c_n(n, constant))
    return n


def threshold_starlike(e_constant: float = PRINTED_CONSTANTS["E"],
                       f_constant: float = PRINTED_CONSTANTS["F"]) -> int:
    """Least n for which starlikeness of ``s_n`` on ``|z| <= 0.5698``
    follows from the ``E_n``, ``F_n`` argument."""
    n = _first_section(
        lambda k: starlike_accepts(k, e_constant, f_constant)
    )
    logger.debug("starlike threshold %d (E_n = %g, F_n = %g)",
                 n, e_n(n, e_constant), f_n(n, f_constant))
    return n


def coefficient_radius(n: int,
                       prop: RadiusProperty = RadiusProperty.
                       CLOSE_TO_CONVEX_ORDER) -> float:
    """Radius of the disk where the coefficient condition of `prop` holds
    for extremal coefficient moduli ``|a_k| = 1/(k(k-1))``.

    For close-to-convexity the condition is
    ``1 - sum_{k=2}^n k |a_k| rho^(k-1) > 0``; for starlikeness it is
    ``1 - A/(1 - B) > 0`` with ``A = sum (k-1)|a_k| rho^(k-1)`` and
    ``B = sum |a_k| rho^(k-1)``. Both reduce to
    ``sum_{k=1}^{n-1} rho^k/k = 1``.

    Returns
    -------
    float
        The least root in ``(0, 1]``; 1 when the condition holds on the
        whole disk.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    prop = RadiusProperty(prop)
    k = np.arange(2, n + 1, dtype=float)
    moduli = 1 / (k * (k - 1))

    if prop is RadiusProperty.CLOSE_TO_CONVEX_ORDER:
        def margin(rho):
            return 1 - np.sum(k * moduli * rho ** (k - 1))
    elif prop is RadiusProperty.STARLIKE_ORDER:
        def margin(rho):
            powers = moduli * rho ** (k - 1)
            return 1 - np.sum((k - 1) * powers) / (1 - np.sum(powers))
    else:
        raise ValueError(f"no coefficient condition for {prop}")

    if margin(1.0) >= 0:
        return 1.0
    return float(scipy.optimize.bisect(margin, 0.0, 1.0, xtol=1e-15))


def fig3_radius(n: int) -> float:
    """Radius of the disk where ``sum_{k=2}^n k |a_k| |z|^(k-1) <= 1``
    with ``|a_k| = 1/(k(k-1))``.

    This is :py:func:`coefficient_radius` for close-to-convexity; the
    value is nonincreasing in `n` and tends to ``1 - 1/e``.
    """
    return coefficient_radius(n, RadiusProperty.CLOSE_TO_CONVEX_ORDER)


@dataclass(frozen=True)
class ConstantCheck:
    """A printed constant next to its recomputation."""

    #: Key in :py:data:`PRINTED_CONSTANTS`.
    name: str

    #: The printed value.
    printed: float

    #: The value recomputed from its defining expression.
    recomputed: float

    #: ``"equal"``, ``"upper"`` (printed rounds up) or ``"lower"``
    #: (printed rounds down).
    kind: str

    #: Allowed distance between printed and recomputed value.
    tolerance: float

    @property
    def difference(self) -> float:
        return self.printed - self.recomputed

    @property
    def agrees(self) -> bool:
        if abs(self.difference) > self.tolerance:
            return False
        if self.kind == "upper":
            return self.difference >= 0
        if self.kind == "lower":
            return self.difference <= 0
        return True

    def to_dict(self) -> dict:
        return {**asdict(self), "difference": self.difference,
                "agrees": self.agrees}


def constant_crosschecks() -> List[ConstantCheck]:
    """Recompute every printed constant from its defining expression."""
    arg_fprime = arcsin_degrees(CTC_RADIUS)
    arg_starlike = arcsin_degrees(
        STARLIKE_RADIUS / (2 - STARLIKE_RADIUS ** 2)
    )
    printed = PRINTED_CONSTANTS
    return [
        ConstantCheck("C", printed["C"], ratio_constant(CTC_RADIUS),
                      "equal", 1e-6),
        ConstantCheck("E", printed["E"], ratio_constant(STARLIKE_RADIUS),
                      "equal", 1e-6),
        ConstantCheck("F", printed["F"],
                      2 * STARLIKE_RADIUS
                      / (math.sqrt(3) * (1 - STARLIKE_RADIUS)),
                      "equal", 1e-6),
        ConstantCheck("arg_fprime_deg", printed["arg_fprime_deg"],
                      arg_fprime, "upper", 1e-3),
        ConstantCheck("ctc_budget_deg", printed["ctc_budget_deg"],
                      90 - arg_fprime, "lower", 1e-3),
        ConstantCheck("arg_starlike_deg", printed["arg_starlike_deg"],
                      arg_starlike, "upper", 1e-3),
        ConstantCheck("starlike_budget_deg", printed["starlike_budget_deg"],
                      90 - arg_starlike, "equal", 1e-6),
    ]
