"""Tests for :py:mod:`gradii.radii`."""
import math

import numpy as np
import pytest

from gradii import radii
from gradii.radii import RadiusProperty, RadiusQuery

CONVEX = RadiusProperty.CONVEX_ORDER
STARLIKE = RadiusProperty.STARLIKE_ORDER
CTC = RadiusProperty.CLOSE_TO_CONVEX_ORDER


@pytest.mark.parametrize("text, expected", [
    ("convex", CONVEX),
    ("CONVEX_ORDER", CONVEX),
    (" Starlike ", STARLIKE),
    ("starlike_order", STARLIKE),
    ("ctc", CTC),
    ("close-to-convex", CTC),
    ("CloseToConvex", CTC),
    ("close_to_convex_order", CTC),
    ("concave", None),
    ("", None),
])
def test_RadiusProperty_parse(text, expected):
    assert RadiusProperty.parse(text) is expected


def test_RadiusProperty_str():
    assert str(CTC) == "ctc"
    assert RadiusProperty("starlike") is STARLIKE


def test_RadiusQuery():
    query = RadiusQuery(0.5, 0.25, "convex")
    assert query.property is CONVEX
    assert query.to_dict() == {"alpha": 0.5, "beta": 0.25,
                               "property": "convex"}


@pytest.mark.parametrize("alpha, beta", [
    (1.0, 1.0), (1.0, -0.1), (0.0, 0.0), (-1.0, 0.5), (1.5, 0.0)
])
def test_RadiusQuery_invalid(alpha, beta):
    with pytest.raises(ValueError):
        RadiusQuery(alpha, beta, CTC)


def test_RadiusQuery_exploratory():
    with pytest.warns(UserWarning):
        query = RadiusQuery(1.5, 0.0, CTC, exploratory=True)
    assert query.alpha == 1.5


def test_indicator_values():
    assert radii.convexity_indicator(1, 0, 0.5) \
        == pytest.approx(0.3465735903, abs=1e-10)
    assert radii.starlikeness_indicator(1, 0, 0.5) \
        == pytest.approx(0.289720770840, abs=1e-10)
    assert radii.ctc_indicator(1, 0, 0.5) \
        == pytest.approx(0.306852819440, abs=1e-12)
    assert radii.ctc_indicator(1, 0.25, 0.5) \
        == pytest.approx(0.056852819440, abs=1e-12)


def test_starlikeness_indicator_vanishes_at_zero():
    for alpha in (0.1, 0.5, 1.0):
        for beta in (0.0, 0.5, 0.9):
            assert radii.starlikeness_indicator(alpha, beta, 0.0) == 0


def test_indicators_reduce_to_corollary_forms():
    rho = np.linspace(0.01, 0.95, 50)
    log = np.log1p(-rho)
    np.testing.assert_allclose(
        radii.convexity_indicator(1, 0, rho),
        -radii.corollary_indicator(CONVEX, rho), atol=1e-14
    )
    np.testing.assert_allclose(
        radii.starlikeness_indicator(1, 0, rho),
        -2 * (2 - rho) * radii.corollary_indicator(STARLIKE, rho),
        atol=1e-13
    )
    np.testing.assert_allclose(
        radii.ctc_indicator(1, 0, rho),
        radii.corollary_indicator(CTC, rho), atol=1e-14
    )
    np.testing.assert_allclose(radii.corollary_indicator(CTC, rho), 1 + log)


def test_indicator_shapes():
    assert isinstance(radii.ctc_indicator(1, 0, 0.5), float)
    assert radii.ctc_indicator(1, 0, np.zeros((2, 3))).shape == (2, 3)


@pytest.mark.parametrize("rho", [-0.1, 1.0, 1.5])
def test_indicator_rho_out_of_range(rho):
    with pytest.raises(ValueError, match="rho"):
        radii.convexity_indicator(1, 0, rho)


def test_least_positive_root_linear():
    root = 0.3 + 1 / 7000
    result = radii.least_positive_root(lambda rho: root - rho)
    assert result.converged
    assert result.rho == pytest.approx(root, abs=1e-12)
    assert result.bracket_low <= result.rho <= result.bracket_high
    assert result.bracket_high - result.bracket_low <= 1e-12
    assert result.iterations > 0


def test_least_positive_root_zero_on_scan_grid():
    result = radii.least_positive_root(
        lambda rho: np.where(rho < 0.25, 1.0, 0.0))
    assert result.converged
    assert result.rho == pytest.approx(0.25, abs=1e-3)
    assert result.rho >= 0.25
    assert result.residual == 0
    assert result.bracket_low == result.rho == result.bracket_high
    assert result.iterations == 0


def test_least_positive_root_steep_indicator():
    query = RadiusQuery(0.05, 0.0, CTC)
    result = radii.radius_of_property(query)
    assert result.converged
    assert result.rho == pytest.approx(0.999993760762, abs=1e-9)
    assert abs(result.residual) <= radii.RESIDUAL_TOLERANCE


@pytest.mark.parametrize("tol", [1e-3, 1e-6])
def test_least_positive_root_coarse_tol(tol):
    query = RadiusQuery(1.0, 0.0, CTC)
    result = radii.radius_of_property(query, tol=tol)
    assert result.converged
    assert abs(result.residual) <= radii.RESIDUAL_TOLERANCE
    assert result.bracket_high - result.bracket_low <= tol
    assert result.bracket_low <= 1 - math.exp(-1) <= result.bracket_high


def test_least_positive_root_first_of_several():
    result = radii.least_positive_root(
        lambda rho: np.cos(10 * np.pi * rho))
    assert result.rho == pytest.approx(0.05, abs=1e-12)


def test_least_positive_root_exact_zero():
    result = radii.least_positive_root(lambda rho: rho)
    assert result == radii.RadiusResult(0.0, 0.0, 0.0, 0.0, True, 0)


def test_least_positive_root_no_sign_change():
    result = radii.least_positive_root(lambda rho: 1 + 0 * rho,
                                       floor=0.25)
    assert not result.converged
    assert result.rho == radii.RHO_MAX
    assert result.bracket_low == 0.25
    assert result.bracket_high == radii.RHO_MAX
    assert result.residual == 1


@pytest.mark.parametrize("kwargs", [
    {"scan_step": 0.0}, {"tol": -1.0}, {"floor": 1.0}, {"floor": -0.5}
])
def test_least_positive_root_invalid(kwargs):
    with pytest.raises(ValueError):
        radii.least_positive_root(lambda rho: 0.5 - rho, **kwargs)


@pytest.mark.parametrize("alpha, prop, expected", [
    (1.0, CONVEX, 0.3577992959),
    (1.0, STARLIKE, 0.5697968585),
    (1.0, CTC, 1 - math.exp(-1)),
    (0.5, CONVEX, 0.5018465192),
])
def test_radius_of_property(alpha, prop, expected):
    result = radii.radius_of_property(RadiusQuery(alpha, 0.0, prop))
    assert result.converged
    assert result.rho == pytest.approx(expected, abs=1e-9)
    assert abs(result.residual) <= radii.RESIDUAL_TOLERANCE


@pytest.mark.parametrize("prop, printed", [
    (CONVEX, 0.3578), (STARLIKE, 0.5698), (CTC, 0.6321)
])
def test_radius_matches_printed_value(prop, printed):
    result = radii.radius_of_property(RadiusQuery(1.0, 0.0, prop))
    assert result.rho == pytest.approx(printed, abs=5e-4)


@pytest.mark.parametrize("prop", list(RadiusProperty))
def test_radius_decreases_with_alpha_and_beta(prop):
    def rho(alpha, beta):
        return radii.radius_of_property(RadiusQuery(alpha, beta, prop)).rho

    assert rho(0.2, 0.0) > rho(0.6, 0.0) > rho(1.0, 0.0)
    assert rho(1.0, 0.0) > rho(1.0, 0.3) > rho(1.0, 0.6)


def test_RadiusResult_to_dict():
    result = radii.radius_of_property(RadiusQuery(1.0, 0.0, CTC))
    d = result.to_dict()
    assert set(d) == {"rho", "residual", "bracket_low", "bracket_high",
                      "converged", "iterations"}
    assert d["rho"] == result.rho


@pytest.mark.parametrize("index, alpha, x, expected", [
    (1, 1.0, 0.0, 0.5),
    (2, 1.0, 0.0, (math.sqrt(10) - 2) / 3),
    (3, 1.0, 0.5, 0.306852819440),
    (4, 1.0, 0.3, 0.3338182237),
    (5, 1.0, 0.0, 1.0),
    (6, 1.0, 0.0, math.sqrt(3) - 1),
    (8, 1.0, 0.3, 0.7303265958),
    (9, 0.5, 0.5, 1.0),
    (10, 1.0, 0.0, math.sqrt(3) - 1),
    (11, 1.0, 0.5, 0.306852819440),
])
def test_aux_psi(index, alpha, x, expected):
    assert radii.aux_psi(index, alpha, x) == pytest.approx(expected,
                                                           abs=1e-9)


def test_aux_psi_critical_alphas():
    assert radii.aux_psi(2, (6 + math.sqrt(436)) / 50, 0.0) \
        == pytest.approx(1.0, abs=1e-12)
    assert radii.aux_psi(6, 2 / 3, 0.0) == pytest.approx(1.0, abs=1e-12)
    assert radii.aux_psi(10, 2 / 3, 0.0) == pytest.approx(1.0, abs=1e-12)


def test_aux_psi_invalid():
    with pytest.raises(ValueError, match="index"):
        radii.aux_psi(12, 1.0, 0.5)
    with pytest.raises(ValueError, match="rho = 0"):
        radii.aux_psi(8, 1.0, 0.0)
    with pytest.raises(ValueError, match="beta"):
        radii.aux_psi(2, 1.0, 1.0)
    with pytest.raises(ValueError, match="alpha"):
        radii.aux_psi(3, 0.0, 0.5)


def test_aux_psi_vectorized():
    alphas = np.array([0.25, 0.5, 1.0])
    values = radii.aux_psi(6, alphas, 0.2)
    assert values.shape == (3,)
    assert np.all(np.diff(values) < 0)


@pytest.mark.parametrize("n, prop, expected", [
    (2, CONVEX, 0.5),
    (3, CONVEX, (math.sqrt(10) - 2) / 3),
    (2, STARLIKE, 1.0),
    (3, STARLIKE, math.sqrt(3) - 1),
    (2, CTC, 1.0),
    (3, CTC, math.sqrt(3) - 1),
])
def test_low_order_radius(n, prop, expected):
    assert radii.low_order_radius(1.0, 0.0, n, prop) \
        == pytest.approx(expected, abs=1e-12)


def test_low_order_radius_capped():
    assert radii.low_order_radius(0.25, 0.0, 3, CONVEX) == 1.0
    with pytest.raises(ValueError, match="n = 2 and 3"):
        radii.low_order_radius(1.0, 0.0, 4, CONVEX)


def test_classical_constants():
    constants = radii.classical_constants()
    assert constants.rho_convex == pytest.approx(0.3577992959, abs=1e-9)
    assert constants.rho_starlike == pytest.approx(0.5697968585, abs=1e-9)
    assert constants.rho_ctc == pytest.approx(0.6321205588, abs=1e-10)


def test_proof_constants():
    constants = radii.proof_constants()
    assert constants.rho_convex == pytest.approx(0.3577992959, abs=1e-9)
    assert constants.rho_starlike == pytest.approx(0.5697968585, abs=1e-9)
    assert constants.rho_ctc == pytest.approx(1 - math.exp(-1), abs=1e-9)
