import dataclasses
import json
import math

import numpy as np
import pytest

from renyi_rearrange import (
    BadParameter,
    ConfigInvalid,
    DEFAULT_TOLS,
    OrderOutOfRange,
    PhiSpec,
    SuiteConfig,
    eps_conv,
    gaussian_on_grid,
    report_geq,
    report_leq,
    reports_to_json,
    run_suite,
    summarize,
)
from renyi_rearrange.verifier import check_epi_chain, check_main_theorem, check_rbll


class TestReportGeq:
    def test_finite_pass_and_margin(self):
        rep = report_geq("x", 3.0, 2.5, 1e-9)
        assert rep.passed and rep.status == "pass"
        assert rep.margin == pytest.approx(0.5)

    def test_finite_fail(self):
        rep = report_geq("x", 2.0, 2.5, 1e-9)
        assert not rep.passed and rep.status == "fail"
        assert rep.margin == pytest.approx(-0.5)

    def test_within_tolerance_passes(self):
        assert report_geq("x", 1.0, 1.0 + 1e-12, 1e-9).passed

    def test_infinite_lhs(self):
        assert report_geq("x", math.inf, 7.0, 0.0).passed
        assert report_geq("x", math.inf, 7.0, 0.0).margin == math.inf
        rep = report_geq("x", -math.inf, 7.0, 0.0)
        assert not rep.passed and rep.margin == -math.inf

    def test_infinite_rhs(self):
        assert report_geq("x", 7.0, -math.inf, 0.0).passed
        assert not report_geq("x", 7.0, math.inf, 0.0).passed

    def test_same_sign_infinities_inconclusive(self):
        for side in (math.inf, -math.inf):
            rep = report_geq("x", side, side, 0.0)
            assert rep.status == "inconclusive"
            assert not rep.passed
            assert math.isnan(rep.margin)


class TestReportLeq:
    def test_keeps_statement_order(self):
        rep = report_leq("x", 2.0, 3.0, 1e-9)
        assert (rep.lhs, rep.rhs) == (2.0, 3.0)
        assert rep.passed
        # margin is still sign-normalized: room below the bound
        assert rep.margin == pytest.approx(1.0)

    def test_fail_direction(self):
        assert not report_leq("x", 3.0, 2.0, 1e-9).passed

    def test_infinite_bound_passes(self):
        # a divergence bounded by +inf is trivially fine
        rep = report_leq("x", 5.0, math.inf, 0.0)
        assert rep.passed and rep.margin == math.inf

    def test_both_infinite_inconclusive(self):
        rep = report_leq("x", math.inf, math.inf, 0.0)
        assert rep.status == "inconclusive" and math.isnan(rep.margin)


class TestSerialization:
    def test_to_dict_wraps_nonfinite(self):
        rep = report_geq("x", math.inf, math.inf, 0.0)
        d = rep.to_dict()
        assert d["lhs"] == "inf" and d["rhs"] == "inf"
        assert d["margin"] == "nan"
        assert d["pass"] is False and d["status"] == "inconclusive"

    def test_to_dict_sorts_params(self):
        rep = report_geq("x", 1.0, 0.0, 0.0, params={"b": 1, "a": 2})
        assert list(rep.to_dict()["params"]) == ["a", "b"]

    def test_json_is_strict_and_deterministic(self):
        reps = [report_geq("a", 1.0, 0.0, 1e-9, seed=3),
                report_leq("b", -math.inf, 0.0, 0.0)]
        text1 = reports_to_json(reps, extra={"seed": 3, "argv": ["verify"]})
        text2 = reports_to_json(reps, extra={"seed": 3, "argv": ["verify"]})
        assert text1 == text2
        payload = json.loads(text1)  # would choke on bare Infinity/NaN
        assert payload["summary"]["total"] == 2
        assert "Infinity" not in text1 and "NaN" not in text1

    def test_summarize_counts(self):
        reps = [report_geq("a", 1.0, 0.0, 0.0),
                report_geq("b", 0.0, 1.0, 0.0),
                report_geq("c", math.inf, math.inf, 0.0)]
        assert summarize(reps) == {
            "total": 3, "passed": 1, "failed": 1, "inconclusive": 1}


def _gauss(mean, sd, cells=1024, halfwidth=6.0):
    dx = 2.0 * halfwidth / cells
    return gaussian_on_grid(mean, sd, -halfwidth, dx, cells)


class TestChecks:
    def test_main_theorem_gaussian_near_equality(self):
        # a centered Gaussian is its own rearrangement, so the two sides
        # only differ through the resolution doubling
        g = _gauss(0.0, 1.0)
        for p in (0.0, 0.5, 1.0, 2.0, math.inf):
            rep = check_main_theorem([g, g], p)
            assert rep.passed
            assert abs(rep.margin) < 1e-3

    def test_main_theorem_needs_two(self):
        with pytest.raises(BadParameter):
            check_main_theorem([_gauss(0.0, 1.0)], 1.0)

    def test_epi_chain_gaussians_tight(self):
        rep = check_epi_chain(_gauss(0.0, 0.9), _gauss(0.3, 0.7))
        assert rep.passed
        h_sum = rep.params["h_sum"]
        h_star = rep.params["h_star"]
        bound = rep.params["gaussian_bound"]
        exact = 0.5 * math.log(2.0 * math.pi * math.e * (0.81 + 0.49))
        for value in (h_sum, h_star, bound):
            assert value == pytest.approx(exact, abs=2e-3)

    def test_rbll_mass_degenerate(self):
        rep = check_rbll([_gauss(0.2, 0.8)])
        assert rep.passed
        assert abs(rep.margin) < 1e-12

    def test_rbll_needs_input(self):
        with pytest.raises(BadParameter):
            check_rbll([])


class TestPhiSpec:
    def test_labels(self):
        assert PhiSpec("xlogx").label() == "xlogx"
        assert PhiSpec("power", 2.0).label() == "power(2)"
        assert PhiSpec("hinge", 0.25).label() == "hinge(0.25)"

    def test_validation(self):
        with pytest.raises(BadParameter):
            PhiSpec("cubic")
        with pytest.raises(BadParameter):
            PhiSpec("power", 1.0)
        with pytest.raises(BadParameter):
            PhiSpec("hinge", 0.0)

    def test_xlogx_vanishes_at_zero(self):
        out = PhiSpec("xlogx").apply(np.array([0.0, 1.0]))
        assert out[0] == 0.0 and out[1] == 0.0

    def test_concave_power_flipped(self):
        out = PhiSpec("power", 0.5).apply(np.array([4.0]))
        assert out[0] == -2.0


class TestSuiteConfig:
    def test_defaults_validate(self):
        SuiteConfig().validate()

    @pytest.mark.parametrize("kwargs", [
        {"suite": "bogus"},
        {"pairs": -1},
        {"triples": -2},
        {"smooth_count": -1},
        {"cells": 4},
        {"halfwidth": 0.0},
        {"orders": ()},
    ])
    def test_invalid_configs(self, kwargs):
        with pytest.raises(ConfigInvalid):
            SuiteConfig(**kwargs).validate()

    def test_bad_order_rejected(self):
        with pytest.raises(OrderOutOfRange):
            SuiteConfig(orders=(-2.0,)).validate()


class TestRunSuite:
    def test_deterministic_reports(self):
        config = SuiteConfig(suite="divergence", seed=11, smooth_count=3,
                             cells=256)
        first = [r.to_dict() for r in run_suite(config)]
        second = [r.to_dict() for r in run_suite(config)]
        assert first == second
        assert len(first) == 3 * 4  # two alphas + L1 + variance per pair

    def test_small_all_run_is_green(self):
        config = SuiteConfig(suite="all", seed=5, pairs=2, triples=1,
                             smooth_count=2, cells=512)
        reports = run_suite(config)
        counts = summarize(reports)
        assert counts["failed"] == 0
        assert counts["inconclusive"] == 0
        assert counts["total"] == len(reports) > 40

    def test_unknown_suite_raises(self):
        with pytest.raises(ConfigInvalid):
            run_suite(SuiteConfig(suite="nope"))

    def test_zero_budget_failures_bounded_by_default_budget(self):
        # zeroing the convolution budget flips a handful of near-equality
        # checks to failing, but only by amounts the default budget was
        # sized to absorb; this pins the discretization-error rationale
        tight = dataclasses.replace(DEFAULT_TOLS, eps_conv_factor=0.0)
        config = SuiteConfig(suite="main", seed=0, pairs=6, triples=2,
                             cells=256, tols=tight)
        fails = [r for r in run_suite(config) if r.status == "fail"]
        assert fails
        dx = 2.0 * config.halfwidth / config.cells
        assert all(r.margin >= -eps_conv(dx, 3) for r in fails)
