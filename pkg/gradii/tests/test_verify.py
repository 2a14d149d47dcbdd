"""Tests for :py:mod:`gradii.verify`."""
import json

import numpy as np
import pytest

from gradii import classg, series, verify
from gradii.grid import DiskGrid
from gradii.radii import RadiusProperty
from gradii.series import NormalizedSeries
from gradii.settings import suite_settings
from gradii.verify import MonotonicityTarget, VerificationReport


def test_VerificationReport_to_json():
    report = VerificationReport("a/b", False, -0.5, -0.25 + 1j,
                                {"n": np.int64(3), "rho": np.float64(0.5)},
                                ("vanishing",))
    decoded = json.loads(report.to_json())
    assert decoded == {"check_id": "a/b", "passed": False,
                       "worst_margin": -0.5, "witness": [-0.25, 1.0],
                       "parameters": {"n": 3, "rho": 0.5},
                       "notes": ["vanishing"]}
    assert report.to_json().index('"check_id"') \
        < report.to_json().index('"worst_margin"')


def test_VerificationReport_with_parameters():
    report = VerificationReport("x", True, 1.0, None, {"a": 1})
    assert report.with_parameters(b=2) is report
    assert report.parameters == {"a": 1, "b": 2}


def test_combine():
    reports = [VerificationReport("x", True, 0.5, 1, {"n": 1}),
               VerificationReport("x", False, -0.5, 2, {"n": 2}, ("a",)),
               VerificationReport("x", True, 0.1, 3, {"n": 3}, ("b",))]
    combined = verify.combine("all", reports, {"seed": 1}, notes=("c",))
    assert combined.check_id == "all"
    assert not combined.passed
    assert combined.worst_margin == -0.5
    assert combined.witness == 2
    assert combined.parameters == {"n": 2, "seed": 1, "case_count": 3}
    assert combined.notes == ("a", "b", "c")
    assert verify.combine("ok", reports[::2]).passed
    with pytest.raises(ValueError):
        verify.combine("none", [])


def test_check_ctc_order(koebe_section):
    report = verify.check_ctc_order(koebe_section, 2, 0.2, 0.0)
    assert report.passed
    assert report.worst_margin == pytest.approx(0.2, abs=1e-12)
    assert report.check_id == "ctc/n=2"
    assert report.parameters["grid"] == DiskGrid(64, 256, 0.2).to_dict()


def test_check_ctc_order_fails_outside_radius(koebe_section):
    report = verify.check_ctc_order(koebe_section, 2, 0.3, 0.0,
                                    check_id="koebe")
    assert not report.passed
    assert report.check_id == "koebe"
    assert report.worst_margin == pytest.approx(-0.2, abs=1e-12)
    assert report.witness == pytest.approx(-0.3)
    assert report.notes == ("rerun on refined grid",)
    assert report.parameters["grid"]["angle_count"] == 1024


def test_check_convex_order(koebe_section):
    assert verify.check_convex_order(koebe_section, 2, 0.1, 0.0).passed
    assert not verify.check_convex_order(koebe_section, 2, 0.2, 0.0).passed


@pytest.mark.parametrize("prop, quotient, rho", [
    (RadiusProperty.CONVEX_ORDER, series.log_derivative_at, 0.1),
    (RadiusProperty.STARLIKE_ORDER, series.star_quotient_at, 0.2),
])
def test_check_property_matches_quotient(g1_member, prop, quotient, rho):
    grid = DiskGrid(8, 64, rho)
    sn = series.section(g1_member, 5, order=5)
    expected = np.min(np.real(quotient(sn, grid.points()))) - 0.1
    report = verify.check_property(prop, g1_member, 5, rho, 0.1, grid=grid)
    assert report.passed
    assert report.worst_margin == pytest.approx(expected, abs=1e-12)


def test_check_starlike_order_vanishing(koebe_section):
    report = verify.check_starlike_order(koebe_section, 2, 0.5, 0.0)
    assert not report.passed
    assert report.worst_margin == verify.VANISHING_MARGIN
    assert report.witness == pytest.approx(-0.5)
    assert "vanishing" in report.notes


def test_check_order_of_beta(half_square):
    # Re(1 - z) > 1 - rho on |z| <= rho
    assert verify.check_ctc_order(half_square, 2, 0.5, 0.45).passed
    assert not verify.check_ctc_order(half_square, 2, 0.5, 0.55).passed


def test_check_property_grid_too_large(koebe_section):
    with pytest.raises(ValueError, match="exceeds"):
        verify.check_property(RadiusProperty.CONVEX_ORDER, koebe_section, 2,
                              0.1, 0.0, grid=DiskGrid(4, 16, 0.2))


@pytest.mark.parametrize("prop, low, high", [
    (RadiusProperty.CONVEX_ORDER, 0.115, 0.125),
    (RadiusProperty.STARLIKE_ORDER, 0.24, 0.25 + 1e-9),
    (RadiusProperty.CLOSE_TO_CONVEX_ORDER, 0.24, 0.25 + 1e-9),
])
def test_empirical_property_radius_koebe(prop, low, high):
    radius = verify.empirical_property_radius(series.koebe(8), 2, prop)
    assert low <= radius <= high


def test_empirical_property_radius_whole_disk(half_square):
    radius = verify.empirical_property_radius(
        half_square, 2, RadiusProperty.CLOSE_TO_CONVEX_ORDER)
    assert radius == pytest.approx(0.99)


def test_empirical_property_radius_invalid_step(half_square):
    with pytest.raises(ValueError, match="radial_step"):
        verify.empirical_property_radius(
            half_square, 2, RadiusProperty.CONVEX_ORDER, radial_step=0.1)


@pytest.mark.parametrize("n", [2, 5, 12])
@pytest.mark.parametrize("prop", list(RadiusProperty))
def test_section_of_member_inside_classical_radius(g1_member, n, prop):
    expected = {
        RadiusProperty.CONVEX_ORDER: 0.3577992959,
        RadiusProperty.STARLIKE_ORDER: 0.5697968585,
        RadiusProperty.CLOSE_TO_CONVEX_ORDER: 0.6321205588,
    }[prop]
    assert verify.check_property(prop, g1_member, n, expected, 0.0).passed
    assert verify.empirical_property_radius(g1_member, n, prop) \
        >= expected - 0.01


@pytest.mark.parametrize("beta", [0.3, 0.6])
@pytest.mark.parametrize("alpha", [0.25, 0.5])
@pytest.mark.parametrize("prop", list(RadiusProperty))
def test_section_radius_suite_orders(prop, alpha, beta):
    members = [(f"extremal/n={m}", classg.extremal_function(alpha, m, 64))
               for m in (2, 3)]
    members.extend((f"seed={s}", f)
                   for s, f in classg.random_members(alpha, 7, 2, 64))
    reports = verify.section_radius_suite(prop, alpha, beta, members,
                                          [2, 5, 10])
    check_id = f"radii/{prop.value}/alpha={alpha}/beta={beta}"
    assert [r.check_id for r in reports] \
        == [f"{check_id}/empirical", f"{check_id}/sections"]
    assert all(r.passed for r in reports)
    for report in reports:
        assert report.parameters["alpha"] == alpha
        assert report.parameters["beta"] == beta
        assert 0 < report.parameters["radius"] < 0.99
        assert report.parameters["case_count"] == 12


def test_section_radius_suite_check_id(g1_member):
    reports = verify.section_radius_suite(
        RadiusProperty.CLOSE_TO_CONVEX_ORDER, 1.0, 0.0,
        [("member", g1_member)], [5], check_id="radii/ctc")
    assert [r.check_id for r in reports] \
        == ["radii/ctc/empirical", "radii/ctc/sections"]
    assert reports[0].parameters["radius"] \
        == pytest.approx(0.6321205588, abs=1e-9)


def test_check_coefficient_bounds(half_square):
    assert verify.check_coefficient_bounds(half_square, 1.0).passed
    coeffs = half_square.coeffs.copy()
    coeffs[3] = 0.5
    report = verify.check_coefficient_bounds(NormalizedSeries(coeffs), 1.0)
    assert not report.passed
    assert report.witness == 3
    assert report.worst_margin == pytest.approx(1 / 6 - 0.5)


def test_coefficient_bound_suite():
    report = verify.coefficient_bound_suite(0.5, seed_count=10, order=16)
    assert report.passed
    assert report.parameters["case_count"] == 10
    again = verify.coefficient_bound_suite(0.5, seed_count=10, order=16)
    assert report.to_json() == again.to_json()


def test_extremal_attainment_report():
    report = verify.extremal_attainment_report([0.25, 0.5, 1.0],
                                               range(2, 9))
    assert report.passed
    assert report.worst_margin > 0


def test_membership_report():
    report = verify.membership_report(1.0, seed_count=1)
    assert report.passed
    assert report.notes == ("sampled condition only",)


def test_tail_bound_suite():
    reports = verify.tail_bound_suite(1.0, seed_count=2, sections=[2, 5],
                                      grid=DiskGrid(4, 64, 0.9), order=64)
    assert [r.check_id for r in reports] == [
        "tails/alpha=1.0/sigma",
        "tails/alpha=1.0/sigma1",
        "tails/alpha=1.0/sigma2",
    ]
    assert all(r.passed for r in reports)
    assert all(r.parameters["case_count"] == 4 for r in reports)


def test_distortion_suite():
    reports = verify.distortion_suite(0.5, seed_count=2,
                                      grid=DiskGrid(4, 64, 0.9))
    assert [r.check_id for r in reports] == [
        "distortion/alpha=0.5/curvature",
        "distortion/alpha=0.5/deriv",
        "distortion/alpha=0.5/quotient",
        "distortion/alpha=0.5/starlike",
    ]
    assert all(r.passed for r in reports)
    assert all(r.parameters["case_count"] == 2 for r in reports)


def test_distortion_margins_half_square(half_square):
    margins = verify.distortion_margins(half_square, 1.0,
                                        DiskGrid(4, 64, 0.9))
    for name, values in margins.items():
        assert values.min() == pytest.approx(0.0, abs=1e-12), name


def test_distortion_margins_single_atom():
    f = classg.random_member(classg.GAlphaSpec(0.5),
                             classg.HerglotzSpec.point_mass(1.0),
                             order=classg.MEMBERSHIP_ORDER)
    margins = verify.distortion_margins(f, 0.5, DiskGrid(4, 64, 0.9))
    assert np.all(margins["curvature"] > -verify.PASS_TOLERANCE)
    assert np.all(margins["curvature"] < 1e-9)
    assert all(values.min() > -verify.PASS_TOLERANCE
               for values in margins.values())


def test_distortion_margins_koebe():
    margins = verify.distortion_margins(series.koebe(64), 1.0,
                                        DiskGrid(4, 64, 0.5))
    assert margins["deriv"].min() < 0
    assert margins["curvature"].min() < 0


def test_rogosinski_suite(half_square):
    report = verify.rogosinski_suite(half_square)
    assert report.passed
    assert report.worst_margin == pytest.approx(0.0, abs=1e-12)
    assert verify.rogosinski_suite(series.identity(40)).passed


def test_rogosinski_suite_koebe():
    report = verify.rogosinski_suite(series.koebe(40))
    assert not report.passed
    assert report.witness == 2


def test_section_ratio_suite(g1_member):
    for n in (2, 3, 6):
        report = verify.section_ratio_suite(g1_member, n)
        assert report.passed
        assert report.parameters["skipped"] == 0


def test_MonotonicityTarget_invalid():
    with pytest.raises(ValueError, match="parameter"):
        MonotonicityTarget(3, "gamma", (1.0,), (0.5,))
    with pytest.raises(ValueError, match="does not depend on beta"):
        MonotonicityTarget(3, "beta", (1.0,), (0.5,))


def test_check_monotonicity():
    report = verify.check_monotonicity(
        MonotonicityTarget(9, "beta", (0.5, 1.0), (0.1, 0.5)))
    assert report.passed
    assert report.check_id == "monotonicity/psi09/beta"
    assert report.worst_margin == pytest.approx(1.0)
    graphical = verify.check_monotonicity(
        MonotonicityTarget(2, "alpha", (0.5, 1.0), (0.1, 0.5)))
    assert graphical.notes == ("sign argued graphically",)


def test_monotonicity_suite():
    reports = verify.monotonicity_suite()
    assert len(reports) == 11
    assert all(r.passed for r in reports)


def test_sequence_monotonicity_suite():
    reports = verify.sequence_monotonicity_suite(last=20)
    assert [r.check_id for r in reports] == [
        "sequences/S1/decreasing", "sequences/S1/closed-form",
        "sequences/S2/decreasing", "sequences/S2/closed-form",
    ]
    assert all(r.passed for r in reports)


@pytest.mark.parametrize("values, passed", [
    ([3.0, 2.0, 1.0], True),
    ([1.0, 1.0, 1.0], False),
    ([1.0, 0.5, 0.5], False),
    ([1.0, 1.0 + 1e-12, 0.5], False),
])
def test_decrease_report_is_strict(values, passed):
    report = verify._decrease_report("seq", values, 2)
    assert report.passed is passed
    assert (report.worst_margin > 0) is passed


def test_sequence_monotonicity_suite_flat_sequence(monkeypatch):
    monkeypatch.setattr(verify.bounds, "s1_value", lambda n, rho: 1.0)
    reports = {r.check_id: r
               for r in verify.sequence_monotonicity_suite(last=10)}
    assert not reports["sequences/S1/decreasing"].passed
    assert reports["sequences/S1/decreasing"].worst_margin == 0
    assert reports["sequences/S2/decreasing"].passed


def test_threshold_suite():
    reports = {r.check_id: r for r in verify.threshold_suite()}
    assert all(r.passed for r in reports.values())
    assert reports["thresholds/ctc"].witness == 17
    assert reports["thresholds/starlike"].witness == 10
    assert reports["thresholds/ctc/crossing"].witness == 16
    assert "thresholds/constants/C" in reports
    assert "thresholds/fig3" in reports


def test_threshold_suite_wrong_expectation():
    reports = {r.check_id: r for r in verify.threshold_suite(ctc=16)}
    assert not reports["thresholds/ctc"].passed


def test_run_suites_unknown():
    with pytest.raises(ValueError, match="Unknown suite"):
        verify.run_suites(["nope"])


def test_run_suites_sorted():
    reports = verify.run_suites(["thresholds", "monotonicity"])
    ids = [r.check_id for r in reports]
    assert ids == sorted(ids)
    assert all(r.passed for r in reports)


@pytest.mark.slow
def test_run_suites_all():
    reports = verify.run_suites()
    failed = [r.check_id for r in reports if not r.passed]
    assert failed == []
    prefixes = {r.check_id.split("/")[0] for r in reports}
    assert {"coeffs", "tails", "sections", "rogosinski", "radii",
            "monotonicity", "sequences", "thresholds",
            "distortion"} <= prefixes
    ids = {r.check_id for r in reports}
    assert "radii/convex/alpha=0.25/beta=0.6/sections" in ids


@pytest.mark.slow
def test_run_suites_deterministic():
    first = [r.to_json() for r in verify.run_suites(["coeffs", "radii"])]
    second = [r.to_json() for r in verify.run_suites(["coeffs", "radii"])]
    assert first == second


@pytest.mark.slow
def test_coefficient_bound_suite_acceptance():
    for alpha in (0.25, 0.5, 1.0):
        assert verify.coefficient_bound_suite(alpha, seed_count=100,
                                              order=32).passed


@pytest.mark.slow
def test_membership_sample_size():
    count = suite_settings("coeffs")["membership_seed_count"]
    reports = [r for r in verify.run_suites(["coeffs"])
               if r.check_id.startswith("coeffs/membership/")]
    assert len(reports) == 3
    assert all(r.passed for r in reports)
    assert all(r.parameters["case_count"] == count for r in reports)
