"""Radii of convexity, starlikeness and close-to-convexity of order beta.

For a section ``s_n`` of a function in G(alpha) each radius is the least
positive root in ``[0, 1)`` of a transcendental indicator function:

- convex of order beta, ``Re(1 + z s_n''/s_n') > beta``:
  :py:func:`convexity_indicator`
- starlike of order beta, ``Re(z s_n'/s_n) > beta``:
  :py:func:`starlikeness_indicator`
- close-to-convex of order beta, ``Re(s_n') > beta``:
  :py:func:`ctc_indicator`

The sign of an indicator carries no meaning; only the location of its
least positive root does.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np
import scipy.optimize

from gradii.classg import GAlphaSpec

#: Right end of the interval on which indicators are evaluated.
RHO_MAX = 1.0 - 1.0e-9

#: Resolution of the sign-change scan.
SCAN_STEP = 1.0e-3

#: Width of the final root bracket.
TOLERANCE = 1.0e-12

#: Largest indicator value accepted at a converged root.
RESIDUAL_TOLERANCE = 1.0e-10

#: Scan floor for the starlikeness indicator, which vanishes at zero.
STARLIKE_FLOOR = 1.0e-3

_RTOL = 4 * np.finfo(float).eps

Real = Union[float, np.ndarray]

logger = logging.getLogger(__name__)


@enum.unique
class RadiusProperty(str, enum.Enum):
    """Geometric property of a section whose radius is sought."""
    CONVEX_ORDER = "convex"
    STARLIKE_ORDER = "starlike"
    CLOSE_TO_CONVEX_ORDER = "ctc"

    def __str__(self):
        return self.value

    @staticmethod
    def parse(text: str) -> Optional[RadiusProperty]:
        """Parse a string into a member of the enumeration.

        Matches the values ``convex``, ``starlike`` and ``ctc``, the member
        names, and the spelled out ``close-to-convex``. The matching is
        case insensitive.

        Returns
        -------
        RadiusProperty or None
            The matching member, or None if `text` matches nothing.
        """
        to_parse = text.strip().casefold().replace("-", "_")
        for prop in RadiusProperty:
            if to_parse in (prop.value, prop.name.casefold(),
                            prop.name.casefold().replace("_", "")):
                return prop
        if to_parse in ("close_to_convex", "closetoconvex"):
            return RadiusProperty.CLOSE_TO_CONVEX_ORDER
        return None


@dataclass(frozen=True)
class RadiusQuery:
    """Request for the radius of a property of order `beta` for G(`alpha`).
    """

    #: Class parameter, in (0, 1] unless `exploratory` is set.
    alpha: float

    #: Order of the property, in [0, 1).
    beta: float

    #: Property whose radius is sought.
    property: RadiusProperty

    #: Accept ``alpha > 1`` (with a warning).
    exploratory: bool = False

    def __post_init__(self):
        if not 0 <= self.beta < 1:
            raise ValueError(f"beta must be in [0, 1), got {self.beta}")
        GAlphaSpec(self.alpha, self.exploratory)
        object.__setattr__(self, "property", RadiusProperty(self.property))

    def to_dict(self) -> dict:
        return {"alpha": self.alpha,
                "beta": self.beta,
                "property": str(self.property)}


@dataclass(frozen=True)
class RadiusResult:
    """Outcome of a least-positive-root search."""

    #: The root (or the right end of the scan if no root was found).
    rho: float

    #: Indicator value at `rho`.
    residual: float

    #: Lower end of the final bracket.
    bracket_low: float

    #: Upper end of the final bracket.
    bracket_high: float

    #: True if a sign change was found and refined to the tolerance.
    converged: bool

    #: Number of bisection iterations.
    iterations: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class RadiusConstants:
    """The three radii for alpha = 1, beta = 0."""
    rho_convex: float
    rho_starlike: float
    rho_ctc: float

    def to_dict(self) -> dict:
        return asdict(self)


def _check_rho(rho: Real) -> np.ndarray:
    rho = np.asarray(rho, dtype=float)
    if np.any(rho < 0) or np.any(rho > RHO_MAX):
        raise ValueError(
            f"rho must be in [0, {RHO_MAX}], got {rho}"
        )
    return rho


def _check_beta(beta: Real) -> np.ndarray:
    beta = np.asarray(beta, dtype=float)
    if np.any(beta < 0) or np.any(beta >= 1):
        raise ValueError(f"beta must be in [0, 1), got {beta}")
    return beta


def _check_alpha(alpha: Real) -> np.ndarray:
    alpha = np.asarray(alpha, dtype=float)
    if np.any(alpha <= 0):
        raise ValueError(f"alpha must be positive, got {alpha}")
    return alpha


def _result(value: np.ndarray) -> Real:
    if np.ndim(value) == 0:
        return float(value)
    return value


def convexity_indicator(alpha: float, beta: float, rho: Real) -> Real:
    """The indicator ``I`` whose least positive root is the radius of
    convexity of order `beta`.

    Parameters
    ----------
    alpha : float
    beta : float
    rho : float or numpy.ndarray
        Radius (or radii) in ``[0, 1 - 1e-9]``.

    Raises
    ------
    ValueError
        If `rho` is outside ``[0, 1 - 1e-9]``.
    """
    rho = _check_rho(rho)
    log = np.log1p(-rho)
    value = ((1 - rho) ** alpha * (rho * (1 + alpha - beta) - (1 - beta))
             + alpha * rho * ((2 - beta) * rho - (1 - beta))
             - alpha * (1 - beta) * (1 - rho) * log)
    return _result(value)


def starlikeness_indicator(alpha: float, beta: float, rho: Real) -> Real:
    """The indicator ``J`` whose least positive root is the radius of
    starlikeness of order `beta`.

    ``J`` vanishes at ``rho = 0`` for every `alpha` and `beta`.
    """
    rho = _check_rho(rho)
    log = np.log1p(-rho)
    value = (-np.expm1((1 + alpha) * log)
             * ((1 + alpha) * (1 - beta - rho) + beta * rho)
             + alpha * (1 + alpha) * (1 + alpha - rho)
             * (((3 - beta) * rho - (2 - beta)) * log
                - (2 - beta) * rho + (2 - beta / 2) * rho ** 2))
    return _result(value)


def ctc_indicator(alpha: float, beta: float, rho: Real) -> Real:
    """The indicator ``K = (1-rho)^alpha + alpha(ln(1-rho) + rho) - beta``.
    """
    rho = _check_rho(rho)
    log = np.log1p(-rho)
    return _result(np.exp(alpha * log) + alpha * (log + rho) - beta)


def corollary_indicator(prop: RadiusProperty, rho: Real) -> Real:
    """The alpha = 1, beta = 0 indicators in their reduced forms.

    ========  ================================
    convex    ``1 - 2 rho + (1-rho) ln(1-rho)``
    starlike  ``rho - rho^2 + (2-3 rho) ln(1-rho)``
    ctc       ``1 + ln(1-rho)``
    ========  ================================
    """
    rho = _check_rho(rho)
    log = np.log1p(-rho)
    prop = RadiusProperty(prop)
    if prop is RadiusProperty.CONVEX_ORDER:
        value = 1 - 2 * rho + (1 - rho) * log
    elif prop is RadiusProperty.STARLIKE_ORDER:
        value = rho - rho ** 2 + (2 - 3 * rho) * log
    else:
        value = 1 + log
    return _result(value)


_INDICATORS: Dict[RadiusProperty, Callable[[float, float, Real], Real]] = {
    RadiusProperty.CONVEX_ORDER: convexity_indicator,
    RadiusProperty.STARLIKE_ORDER: starlikeness_indicator,
    RadiusProperty.CLOSE_TO_CONVEX_ORDER: ctc_indicator,
}

_FLOORS = {
    RadiusProperty.CONVEX_ORDER: 0.0,
    RadiusProperty.STARLIKE_ORDER: STARLIKE_FLOOR,
    RadiusProperty.CLOSE_TO_CONVEX_ORDER: 0.0,
}


def indicator_for(prop: RadiusProperty) -> Callable[[float, float, Real],
                                                    Real]:
    """Return the indicator function of `prop`."""
    return _INDICATORS[RadiusProperty(prop)]


def scan_floor(prop: RadiusProperty) -> float:
    """Left end of the root scan for `prop`."""
    return _FLOORS[RadiusProperty(prop)]


def _bisect(indicator: Callable[[Real], Real], low: float, high: float,
            xtol: float) -> Tuple[float, int, bool]:
    root, info = scipy.optimize.bisect(
        lambda rho: float(indicator(rho)), low, high,
        xtol=xtol, rtol=_RTOL, full_output=True, disp=False
    )
    return float(root), int(info.iterations), bool(info.converged)


def least_positive_root(indicator: Callable[[Real], Real],
                        floor: float = 0.0,
                        scan_step: float = SCAN_STEP,
                        tol: float = TOLERANCE) -> RadiusResult:
    """Find the first root of `indicator` in ``[floor, 1 - 1e-9]``.

    The interval is scanned in steps of `scan_step` for the first sign
    change (or exact zero), which is then refined with
    :py:func:`scipy.optimize.bisect`. If the residual at a `tol` wide
    bracket still exceeds ``RESIDUAL_TOLERANCE`` the root is refined to
    float resolution; the reported bracket stays within `tol`.

    Parameters
    ----------
    indicator : Callable
        Real function of the radius. It must accept numpy arrays.
    floor : float, default 0
        Left end of the scan.
    scan_step : float, default 1e-3
    tol : float, default 1e-12
        Width of the returned bracket.

    Returns
    -------
    RadiusResult
        If no sign change is found the result is not converged, its
        bracket is the whole scan interval and `rho` is the right end.
    """
    if scan_step <= 0:
        raise ValueError(f"scan_step must be positive, got {scan_step}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if not 0 <= floor < RHO_MAX:
        raise ValueError(f"floor must be in [0, 1), got {floor}")
    grid = np.append(np.arange(floor, RHO_MAX, scan_step), RHO_MAX)
    values = np.asarray(indicator(grid), dtype=float)
    signs = np.sign(values)
    zeros = np.flatnonzero(signs == 0)
    changes = np.flatnonzero(signs[:-1] * signs[1:] < 0)
    if zeros.size and (not changes.size or zeros[0] <= changes[0]):
        root = float(grid[zeros[0]])
        return RadiusResult(root, 0.0, root, root, True, 0)
    if not changes.size:
        logger.debug("no sign change in [%g, %g]", floor, RHO_MAX)
        return RadiusResult(RHO_MAX, float(values[-1]), float(floor),
                            RHO_MAX, False, 0)
    low, high = grid[changes[0]], grid[changes[0] + 1]
    xtol = tol / 4
    root, iterations, converged = _bisect(indicator, low, high, xtol)
    residual = float(indicator(root))
    error = xtol + _RTOL * abs(root)
    a, b = max(low, root - error), min(high, root + error)
    if (abs(residual) > RESIDUAL_TOLERANCE
            and float(indicator(a)) * float(indicator(b)) <= 0):
        # Steep near the logarithmic singularity: refine to float resolution.
        root, more, converged = _bisect(indicator, a, b,
                                        np.finfo(float).tiny)
        iterations += more
        residual = float(indicator(root))
    converged = converged and abs(residual) <= RESIDUAL_TOLERANCE
    logger.debug("root %.12f in [%g, %g] after %d iterations",
                 root, low, high, iterations)
    return RadiusResult(
        rho=float(root),
        residual=residual,
        bracket_low=float(max(low, root - error)),
        bracket_high=float(min(high, root + error)),
        converged=converged,
        iterations=iterations
    )


def radius_of_property(query: RadiusQuery, scan_step: float = SCAN_STEP,
                       tol: float = TOLERANCE) -> RadiusResult:
    """Radius of the queried property for sections of G(alpha) members.

    Parameters
    ----------
    query : RadiusQuery
    scan_step : float, default 1e-3
    tol : float, default 1e-12

    Returns
    -------
    RadiusResult
    """
    indicator = indicator_for(query.property)
    result = least_positive_root(
        lambda rho: indicator(query.alpha, query.beta, rho),
        floor=scan_floor(query.property),
        scan_step=scan_step,
        tol=tol
    )
    if not result.converged:
        logger.warning("radius search for %s did not converge", query)
    return result


def _psi1(alpha, beta):
    return (1 - beta) / (alpha * (2 - beta))


def _psi2(alpha, beta):
    return ((np.sqrt((2 - beta) ** 2 + 2 * alpha * (1 - beta) * (3 - beta))
             - alpha * (2 - beta))
            / (alpha * (3 - beta)))


def _psi3(alpha, rho):
    log = np.log1p(-rho)
    return np.exp(alpha * log) + alpha * (log + rho)


def _psi4(alpha, rho):
    log = np.log1p(-rho)
    numerator = (np.exp(alpha * log) * (1 - rho * (1 + alpha))
                 + alpha * rho * (1 - 2 * rho)
                 + alpha * (1 - rho) * log)
    return numerator / ((1 - rho) * _psi3(alpha, rho))


def _psi5(alpha, beta):
    return 2 * (1 - beta) / (alpha * (2 - beta))


def _psi6(alpha, beta):
    return ((np.sqrt(9 * (2 - beta) ** 2 * alpha ** 2
                     + 24 * alpha * (1 - beta) * (3 - beta))
             - 3 * (2 - beta) * alpha)
            / (2 * alpha * (3 - beta)))


def _psi7(alpha, rho):
    log = np.log1p(-rho)
    return (-np.expm1((1 + alpha) * log) / (1 + alpha)
            - alpha * ((1 - rho) * log + rho - rho ** 2 / 2))


def _psi8(alpha, rho):
    log = np.log1p(-rho)
    numerator = (-(1 - rho) * np.expm1((1 + alpha) * log)
                 + alpha * (1 + alpha - rho)
                 * ((3 * rho - 2) * log - 2 * rho + 2 * rho ** 2))
    return numerator / ((1 + alpha - rho) * _psi7(alpha, rho))


def _psi9(alpha, beta):
    return (1 - beta) / alpha


def _psi10(alpha, beta):
    return np.sqrt(1 + 2 * (1 - beta) / alpha) - 1


_PSI = {
    1: _psi1, 2: _psi2, 3: _psi3, 4: _psi4, 5: _psi5, 6: _psi6,
    7: _psi7, 8: _psi8, 9: _psi9, 10: _psi10, 11: _psi3,
}

#: Curves whose second argument is the order beta; the rest take a radius.
BETA_CURVES = frozenset({1, 2, 5, 6, 9, 10})


def aux_psi(index: int, alpha: Real, x: Real) -> Real:
    """Evaluate the auxiliary curve number `index` (1 to 11).

    Curves 1, 2, 5, 6, 9 and 10 bound the radius of ``s_2`` and ``s_3``
    in terms of the order ``beta``; curves 3, 4, 7, 8 and 11 bound the
    general section on the circle of radius ``rho``.

    Parameters
    ----------
    index : int
    alpha : float or numpy.ndarray
    x : float or numpy.ndarray
        ``beta`` for the curves in :py:data:`BETA_CURVES`, ``rho``
        otherwise.

    Raises
    ------
    ValueError
        If `index` is unknown or an argument is outside its domain.
    """
    if index not in _PSI:
        raise ValueError(f"No auxiliary curve with index {index}")
    alpha = _check_alpha(alpha)
    if index in BETA_CURVES:
        x = _check_beta(x)
    else:
        x = _check_rho(x)
        if index == 8 and np.any(x == 0):
            raise ValueError("curve 8 is undefined at rho = 0")
    return _result(_PSI[index](alpha, x))


_LOW_ORDER_CURVES = {
    (2, RadiusProperty.CONVEX_ORDER): 1,
    (3, RadiusProperty.CONVEX_ORDER): 2,
    (2, RadiusProperty.STARLIKE_ORDER): 5,
    (3, RadiusProperty.STARLIKE_ORDER): 6,
    (2, RadiusProperty.CLOSE_TO_CONVEX_ORDER): 9,
    (3, RadiusProperty.CLOSE_TO_CONVEX_ORDER): 10,
}


def low_order_radius(alpha: float, beta: float, n: int,
                     prop: RadiusProperty) -> float:
    """Explicit radius of the property for ``s_2`` or ``s_3``, capped at 1.

    A value of 1 means the section has the property in the whole disk.
    """
    key = (n, RadiusProperty(prop))
    if key not in _LOW_ORDER_CURVES:
        raise ValueError(f"explicit radii exist for n = 2 and 3, got {n}")
    return min(float(aux_psi(_LOW_ORDER_CURVES[key], alpha, beta)), 1.0)


def classical_constants(tol: float = TOLERANCE) -> RadiusConstants:
    """Radii of convexity, starlikeness and close-to-convexity of sections
    of G(1), for beta = 0."""
    return RadiusConstants(
        rho_convex=least_positive_root(
            lambda rho: corollary_indicator(RadiusProperty.CONVEX_ORDER, rho),
            tol=tol
        ).rho,
        rho_starlike=least_positive_root(
            lambda rho: corollary_indicator(RadiusProperty.STARLIKE_ORDER,
                                            rho),
            floor=STARLIKE_FLOOR,
            tol=tol
        ).rho,
        rho_ctc=-math.expm1(-1.0)
    )


def proof_constants(tol: float = TOLERANCE) -> RadiusConstants:
    """The beta-independent caps on the general-section bounds.

    These are the first zeros of curves 4, 8 and 11 at alpha = 1, below
    which the lower bound on the real part of the respective quotient is
    positive.
    """
    def root(index):
        return least_positive_root(lambda rho: aux_psi(index, 1.0, rho),
                                   floor=STARLIKE_FLOOR, tol=tol).rho

    return RadiusConstants(rho_convex=root(4), rho_starlike=root(8),
                           rho_ctc=root(11))
