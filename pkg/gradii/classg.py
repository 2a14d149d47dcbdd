"""Members of the class G(alpha).

A normalized function ``f`` belongs to G(alpha) when it is locally
univalent in the unit disk and

    Re(1 + z f''(z)/f'(z)) < 1 + alpha/2.

This module builds the extremal functions of the coefficient bound
``|a_k| <= alpha/(k(k-1))``, samples deterministic random members from
finite Herglotz measures, and checks the defining inequality on a grid.
"""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

import numpy as np

from gradii import series
from gradii.grid import DEFAULT_GRID, DiskGrid
from gradii.series import ComplexSeries, NormalizedSeries

#: Largest number of atoms in a sampled Herglotz measure.
MAX_ATOMS = 8

#: Truncation degree used when sampling membership near radius 0.99.
#:
#: The series of a member converges like ``r^N`` on the circle of radius
#: ``r``; at ``r = 0.99`` the truncated tail of ``f''`` must stay below the
#: worst membership margin (about ``-alpha/400``).
MEMBERSHIP_ORDER = 2048

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GAlphaSpec:
    """Parameter of the class G(alpha).

    Every theorem about G(alpha) in this package assumes
    ``0 < alpha <= 1``. Values above 1 are only accepted with
    `exploratory` set, and then with a warning.
    """

    #: The class parameter.
    alpha: float

    #: Allow ``alpha > 1``.
    exploratory: bool = False

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.alpha > 1:
            if not self.exploratory:
                raise ValueError(
                    f"alpha must be in (0, 1], got {self.alpha}"
                )
            warnings.warn(
                f"alpha = {self.alpha} is outside (0, 1]; results are "
                "exploratory and not covered by the radius theorems",
                stacklevel=3
            )


@dataclass(frozen=True)
class HerglotzSpec:
    """A finite Herglotz measure ``sum_j lambda_j delta(theta_j)``.

    The measure defines the Caratheodory function

        p(z) = sum_j lambda_j (1 + exp(i theta_j) z)/(1 - exp(i theta_j) z)

    which has ``p(0) = 1`` and ``Re p > 0`` in the unit disk.
    """

    #: Nonnegative weights summing to 1.
    weights: Tuple[float, ...]

    #: Atom locations in [0, 2 pi).
    angles: Tuple[float, ...]

    #: Seed the measure was sampled from (None if it was given explicitly).
    seed: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(map(float, self.weights)))
        object.__setattr__(self, "angles", tuple(map(float, self.angles)))
        if len(self.weights) != len(self.angles):
            raise ValueError(
                "weights and angles must have the same length, got "
                f"{len(self.weights)} and {len(self.angles)}"
            )
        if not 1 <= self.atom_count <= MAX_ATOMS:
            raise ValueError(
                f"atom count must be between 1 and {MAX_ATOMS}, got "
                f"{self.atom_count}"
            )
        if any(w < 0 for w in self.weights):
            raise ValueError(f"weights must be nonnegative, got "
                             f"{self.weights}")
        if abs(sum(self.weights) - 1.0) > 1e-12:
            raise ValueError(
                f"weights must sum to 1, got {sum(self.weights)}"
            )
        if any(not 0 <= t < 2 * np.pi for t in self.angles):
            raise ValueError(f"angles must be in [0, 2 pi), got "
                             f"{self.angles}")

    @property
    def atom_count(self) -> int:
        return len(self.weights)

    @classmethod
    def point_mass(cls, theta: float = 0.0) -> HerglotzSpec:
        """The single atom at `theta`."""
        return cls((1.0,), (theta,))

    @classmethod
    def sample(cls, seed: int,
               atom_count: Optional[int] = None) -> HerglotzSpec:
        """Sample a measure deterministically from `seed`.

        Parameters
        ----------
        seed : int
            Seed for :py:func:`numpy.random.default_rng`.
        atom_count : int, optional
            Number of atoms. If not given it is drawn uniformly from
            ``1, ..., MAX_ATOMS``.
        """
        rng = np.random.default_rng(seed)
        if atom_count is None:
            atom_count = int(rng.integers(1, MAX_ATOMS + 1))
        weights = rng.dirichlet(np.ones(atom_count))
        weights = weights / weights.sum()
        angles = rng.uniform(0.0, 2 * np.pi, size=atom_count)
        return cls(tuple(weights), tuple(angles), seed=seed)


def member_seeds(seed: int, count: int) -> List[int]:
    """Expand a global seed into `count` per-member seeds."""
    state = np.random.SeedSequence(seed).generate_state(count, np.uint64)
    return [int(s) for s in state]


def coefficient_bound(alpha: float, k: int) -> float:
    """Upper bound ``alpha/(k(k-1))`` on ``|a_k|`` for f in G(alpha)."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    return alpha / (k * (k - 1))


def extremal_derivative(alpha: float, n: int,
                        order: int = series.DEFAULT_ORDER) -> ComplexSeries:
    """Series of ``(1 - z^(n-1))^(alpha/(n-1))``."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return series.binomial_power(alpha / (n - 1), n - 1, order)


def extremal_function(alpha: float, n: int,
                      order: int = series.DEFAULT_ORDER) -> NormalizedSeries:
    """The member of G(alpha) with ``|a_n| = alpha/(n(n-1))``.

    The result has truncation degree `order`.
    """
    return series.integrate_normalized(
        extremal_derivative(alpha, n, max(order - 1, 1))
    )


def caratheodory_series(h: HerglotzSpec,
                        order: int = series.DEFAULT_ORDER) -> ComplexSeries:
    """Series of the Caratheodory function of `h`.

    ``p_0 = 1`` and ``p_k = 2 sum_j lambda_j exp(i k theta_j)``.
    """
    k = np.arange(1, order + 1)
    atoms = np.exp(1j * np.outer(k, h.angles))
    coeffs = np.empty(order + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    coeffs[1:] = 2 * atoms @ np.asarray(h.weights)
    return ComplexSeries(coeffs)


def random_member(spec: GAlphaSpec, h: HerglotzSpec,
                  order: int = series.DEFAULT_ORDER) -> NormalizedSeries:
    """Build the member of G(alpha) with
    ``1 + z f''/f' = 1 + alpha/2 - (alpha/2) p``.

    Parameters
    ----------
    spec : GAlphaSpec
    h : HerglotzSpec
        Measure defining the Caratheodory function ``p``.
    order : int
        Truncation degree of the result.

    Returns
    -------
    NormalizedSeries
        ``f`` with ``f''/f' = q = (alpha/2)(1 - p)/z``, obtained as
        ``f' = exp(integral of q)``.
    """
    n = max(order - 1, 1)
    p = caratheodory_series(h, n).coeffs
    log_derivative = np.zeros(n + 1, dtype=np.complex128)
    log_derivative[1:] = -(spec.alpha / 2) * p[1:] / np.arange(1, n + 1)
    derivative = series.exponential(ComplexSeries(log_derivative), n)
    logger.debug("built G(%g) member with %d atom(s) (seed %s)",
                 spec.alpha, h.atom_count, h.seed)
    return series.integrate_normalized(derivative)


def random_members(alpha: float, seed: int, count: int,
                   order: int = series.DEFAULT_ORDER
                   ) -> Iterator[Tuple[int, NormalizedSeries]]:
    """Yield ``(member_seed, f)`` for `count` random members of G(alpha)."""
    spec = GAlphaSpec(alpha)
    for member_seed in member_seeds(seed, count):
        yield member_seed, random_member(
            spec, HerglotzSpec.sample(member_seed), order
        )


def membership_margin(f: NormalizedSeries, alpha: float,
                      grid: DiskGrid = DEFAULT_GRID) -> float:
    """Largest value of ``Re(1 + z f''/f') - (1 + alpha/2)`` on `grid`.

    A negative margin is consistent with membership in G(alpha); a
    positive margin refutes it.

    Raises
    ------
    SingularPointError
        If ``f'`` vanishes at a grid point.
    """
    values = series.log_derivative_at(f, grid.points())
    return float(np.max(values.real) - (1 + alpha / 2))
