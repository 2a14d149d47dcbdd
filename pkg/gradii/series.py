"""Truncated power series with complex coefficients.

Every function that appears in the package (a normalized function `f`, its
derivatives, its sections and tails, and the reciprocal ``z/f``) is carried
as a :py:class:`ComplexSeries`: the coefficients ``c_0, ..., c_N`` of a
polynomial approximation of degree ``N``.

Point-wise operations accept either a scalar or a numpy array of points,
so a whole sampling grid can be evaluated in a single call.
"""
from __future__ import annotations

import logging
from typing import Sequence, Union

import numpy as np

#: Default truncation degree.
DEFAULT_ORDER = 64

#: Absolute threshold below which a denominator is treated as vanishing.
SINGULAR_TOLERANCE = 1.0e-12

#: Points can be a python scalar or an array of complex values.
Points = Union[complex, float, np.ndarray]

logger = logging.getLogger(__name__)


class SingularPointError(ValueError):
    """Exception raised when a quotient is evaluated where its
    denominator (nearly) vanishes.

    Parameters
    ----------
    message : str
        Description of the failure.
    point : complex
        The point where the denominator vanished.
    modulus : float
        Modulus of the denominator at `point`.
    """

    def __init__(self, message: str, point: complex, modulus: float):
        super().__init__(message)
        self.point = complex(point)
        self.modulus = float(modulus)


class ComplexSeries:
    """Truncated power series ``c_0 + c_1 z + ... + c_N z^N``.

    Instances are immutable; the coefficient array is read-only.

    Parameters
    ----------
    coeffs : Sequence of complex
        Coefficients ``c_0, ..., c_N``. At least two coefficients are
        required (the truncation degree ``N`` is at least 1) and every
        coefficient must be finite.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[complex]):
        coeffs = np.array(coeffs, dtype=np.complex128).ravel()
        if coeffs.size < 2:
            raise ValueError(
                "A series needs a truncation order of at least 1, got "
                f"{coeffs.size} coefficient(s)."
            )
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("Series coefficients must be finite.")
        coeffs.setflags(write=False)
        self._coeffs = coeffs
        self._validate()

    def _validate(self):
        """Hook for subclasses that restrict the coefficients."""

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only array of the coefficients ``c_0, ..., c_N``."""
        return self._coeffs

    @property
    def order(self) -> int:
        """Truncation degree ``N``."""
        return self._coeffs.size - 1

    def coefficient(self, k: int) -> complex:
        """Return ``c_k`` (zero for ``k`` above the truncation degree)."""
        if k < 0:
            raise ValueError(f"Coefficient index must be non-negative, "
                             f"got {k}")
        if k > self.order:
            return 0j
        return complex(self._coeffs[k])

    def padded(self, order: int) -> ComplexSeries:
        """Return the series truncated or zero-padded to degree `order`."""
        return ComplexSeries(_resize(self._coeffs, order))

    def conjugate(self) -> ComplexSeries:
        """Return the series with conjugated coefficients."""
        return ComplexSeries(np.conj(self._coeffs))

    def __add__(self, other):
        if not isinstance(other, ComplexSeries):
            return NotImplemented
        order = max(self.order, other.order)
        return ComplexSeries(
            _resize(self._coeffs, order) + _resize(other.coeffs, order)
        )

    def __mul__(self, scalar):
        if isinstance(scalar, ComplexSeries):
            return NotImplemented
        return ComplexSeries(self._coeffs * complex(scalar))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ComplexSeries):
            return NotImplemented
        return np.array_equal(self._coeffs, other.coeffs)

    def __hash__(self):
        return hash(self._coeffs.tobytes())

    def __repr__(self):
        return f"{type(self).__name__}(order={self.order})"


class NormalizedSeries(ComplexSeries):
    """Series of a normalized function, ``f(0) = 0`` and ``f'(0) = 1``."""

    __slots__ = ()

    def _validate(self):
        if self._coeffs[0] != 0 or self._coeffs[1] != 1:
            raise ValueError(
                "A normalized series must have c_0 = 0 and c_1 = 1, got "
                f"c_0 = {self._coeffs[0]}, c_1 = {self._coeffs[1]}."
            )

    def padded(self, order: int) -> NormalizedSeries:
        return NormalizedSeries(_resize(self._coeffs, max(order, 1)))


def _resize(coeffs: np.ndarray, order: int) -> np.ndarray:
    out = np.zeros(order + 1, dtype=np.complex128)
    n = min(order + 1, coeffs.size)
    out[:n] = coeffs[:n]
    return out


def identity(order: int = DEFAULT_ORDER) -> NormalizedSeries:
    """The identity function ``f(z) = z``."""
    coeffs = np.zeros(order + 1, dtype=np.complex128)
    coeffs[1] = 1.0
    return NormalizedSeries(coeffs)


def koebe(order: int = DEFAULT_ORDER) -> NormalizedSeries:
    """The Koebe function ``z/(1-z)^2`` truncated at degree `order`."""
    return NormalizedSeries(np.arange(order + 1, dtype=np.complex128))


def _check_disk(z: Points):
    if np.any(np.abs(z) >= 1.0):
        raise ValueError(
            "Series can only be evaluated in the open unit disk, got "
            f"|z| = {np.max(np.abs(z))}"
        )


def evaluate(s: ComplexSeries, z: Points) -> Points:
    """Evaluate `s` at `z` by Horner's rule.

    Parameters
    ----------
    s : ComplexSeries
    z : complex or numpy.ndarray
        Point(s) in the open unit disk.

    Returns
    -------
    complex or numpy.ndarray
        Value(s) of the truncated series, with the same shape as `z`.

    Raises
    ------
    ValueError
        If any point has modulus 1 or more.
    """
    _check_disk(z)
    z = np.asarray(z, dtype=np.complex128)
    value = np.full(z.shape, s.coeffs[-1], dtype=np.complex128)
    for c in s.coeffs[-2::-1]:
        value = value * z + c
    if value.ndim == 0:
        return complex(value)
    return value


def differentiate(s: ComplexSeries) -> ComplexSeries:
    """Return the derivative ``sum k c_k z^(k-1)`` of `s`.

    The result has degree ``N - 1``; a degree 1 series yields a degree 1
    series whose linear coefficient is zero.
    """
    k = np.arange(1, s.order + 1)
    coeffs = k * s.coeffs[1:]
    return ComplexSeries(_resize(coeffs, max(s.order - 1, 1)))


def integrate_normalized(d: ComplexSeries) -> NormalizedSeries:
    """Return the normalized antiderivative of `d`.

    Parameters
    ----------
    d : ComplexSeries
        A derivative with ``d(0) = 1``.

    Returns
    -------
    NormalizedSeries
        ``f`` with ``f(0) = 0`` and ``f' = d``, of degree ``N + 1``.
    """
    if abs(d.coeffs[0] - 1.0) > SINGULAR_TOLERANCE:
        raise ValueError(
            "Only derivatives with constant term 1 integrate to a normalized"
            f" series, got {d.coeffs[0]}"
        )
    coeffs = np.zeros(d.order + 2, dtype=np.complex128)
    coeffs[2:] = d.coeffs[1:] / np.arange(2, d.order + 2)
    coeffs[1] = 1.0
    return NormalizedSeries(coeffs)


def multiply(s: ComplexSeries, t: ComplexSeries,
             order: int = DEFAULT_ORDER) -> ComplexSeries:
    """Cauchy product of `s` and `t` truncated at degree `order`."""
    return ComplexSeries(_resize(np.convolve(s.coeffs, t.coeffs), order))


def reciprocal_z_over_f(f: NormalizedSeries,
                        order: int = DEFAULT_ORDER) -> ComplexSeries:
    """Coefficients ``b_0 = 1, b_1, ..., b_N`` of ``z/f(z)``.

    Solves ``(f/z)(z/f) = 1`` degree by degree. Coefficients of `f` above
    its truncation degree are taken to be zero.
    """
    g = _resize(f.coeffs[1:], order)
    b = np.zeros(order + 1, dtype=np.complex128)
    b[0] = 1.0
    for m in range(1, order + 1):
        b[m] = -np.dot(g[1:m + 1], b[m - 1::-1])
    return ComplexSeries(b)


def exponential(s: ComplexSeries,
                order: int = DEFAULT_ORDER) -> ComplexSeries:
    """Coefficients of ``exp(s)`` truncated at degree `order`.

    Uses ``m e_m = sum_{j=1}^{m} j c_j e_{m-j}`` with ``e_0 = 1``.

    Raises
    ------
    ValueError
        If `s` has a non-zero constant term.
    """
    if s.coeffs[0] != 0:
        raise ValueError(
            f"exponential requires a zero constant term, got {s.coeffs[0]}"
        )
    jc = np.arange(order + 1) * _resize(s.coeffs, order)
    e = np.zeros(order + 1, dtype=np.complex128)
    e[0] = 1.0
    for m in range(1, order + 1):
        e[m] = np.dot(jc[1:m + 1], e[m - 1::-1]) / m
    return ComplexSeries(e)


def binomial_power(gamma: float, m: int,
                   order: int = DEFAULT_ORDER) -> ComplexSeries:
    """Coefficients of ``(1 - z^m)^gamma`` for real `gamma`.

    The term of degree ``j m`` is ``(-1)^j binom(gamma, j)``; the binomial
    coefficients follow ``binom(gamma, j) = binom(gamma, j-1)(gamma-j+1)/j``.
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    coeffs = np.zeros(order + 1, dtype=np.complex128)
    term = 1.0
    for j in range(order // m + 1):
        if j > 0:
            term *= -(gamma - j + 1) / j
        coeffs[j * m] = term
    return ComplexSeries(coeffs)


def section(f: NormalizedSeries, n: int,
            order: int = None) -> NormalizedSeries:
    """Return the `n`-th section ``z + a_2 z^2 + ... + a_n z^n`` of `f`.

    Parameters
    ----------
    f : NormalizedSeries
    n : int
        Degree of the section, ``2 <= n <= f.order``.
    order : int, optional
        Truncation degree of the result (zero padded). Defaults to
        ``f.order``.
    """
    if n < 2 or n > f.order:
        raise ValueError(
            f"Section degree must be between 2 and {f.order}, got {n}"
        )
    order = f.order if order is None else order
    return NormalizedSeries(_resize(f.coeffs[:n + 1], max(order, n)))


def tail(f: NormalizedSeries, n: int) -> ComplexSeries:
    """Series of the tail ``sigma_n = f - s_n``."""
    if n < 2:
        raise ValueError(f"Tail index must be at least 2, got {n}")
    coeffs = f.coeffs.copy()
    coeffs[:n + 1] = 0.0
    return ComplexSeries(coeffs)


def tail_eval(f: NormalizedSeries, n: int, z: Points) -> Points:
    """Value of ``sigma_n(z; f) = f(z) - s_n(z; f)``."""
    return evaluate(tail(f, n), z)


def _raise_if_vanishing(denominator, z, what):
    modulus = np.abs(denominator)
    if np.any(modulus <= SINGULAR_TOLERANCE):
        i = np.argmin(modulus)
        point = np.ravel(np.asarray(z))[i] if np.ndim(z) else z
        raise SingularPointError(
            f"{what} vanishes at z = {complex(point)}",
            point,
            np.ravel(modulus)[i]
        )


def log_derivative_at(f: ComplexSeries, z: Points) -> Points:
    """Return ``1 + z f''(z)/f'(z)``.

    Raises
    ------
    SingularPointError
        If ``|f'(z)|`` is within 1e-12 of zero.
    """
    d1 = differentiate(f)
    df = evaluate(d1, z)
    _raise_if_vanishing(df, z, "f'")
    return 1 + z * evaluate(differentiate(d1), z) / df


def star_quotient_at(f: ComplexSeries, z: Points) -> Points:
    """Return ``z f'(z)/f(z)``, with the value 1 at ``z = 0``.

    Raises
    ------
    SingularPointError
        If ``|f(z)|`` is within 1e-12 of zero at some ``z != 0``.
    """
    z_arr = np.asarray(z, dtype=np.complex128)
    at_origin = z_arr == 0
    fz = np.asarray(evaluate(f, z_arr))
    _raise_if_vanishing(np.where(at_origin, 1.0, fz), z_arr, "f")
    safe = np.where(at_origin, 1.0, fz)
    quotient = z_arr * np.asarray(evaluate(differentiate(f), z_arr)) / safe
    quotient = np.where(at_origin, 1.0 + 0j, quotient)
    if quotient.ndim == 0:
        return complex(quotient)
    return quotient
