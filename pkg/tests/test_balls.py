import math

import numpy as np
import pytest
from scipy import integrate
from scipy.special import beta as beta_fn
from scipy.special import betainc

from renyi_rearrange import (
    BadParameter,
    BallPair,
    NotIndicator,
    ball_sum_entropy,
    ball_sum_radial,
    brunn_minkowski_check,
    cap_integral,
    convolve,
    gaussian_on_grid,
    make_grid,
    renyi_entropy,
    uniform_interval,
    unit_ball_volume,
    epi_gap_balls,
)


class TestCapIntegral:
    def test_dim1_closed_form(self):
        # int_theta^{pi/2} cos t dt = 1 - sin(theta)
        for theta in (-math.pi / 2, -0.4, 0.0, 0.3, 1.2, math.pi / 2):
            assert cap_integral(theta, 1) == pytest.approx(1.0 - math.sin(theta),
                                                           abs=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_incomplete_beta_cross_check(self, n):
        # for theta >= 0, substituting s = sin^2 t turns the cap integral
        # into half a (regularized) incomplete Beta function
        full = beta_fn(0.5, (n + 1) / 2.0)
        for theta in (0.0, 0.2, 0.7, 1.3):
            s = math.sin(theta) ** 2
            closed = 0.5 * full * (1.0 - betainc(0.5, (n + 1) / 2.0, s))
            assert cap_integral(theta, n) == pytest.approx(closed, abs=1e-10)

    @pytest.mark.parametrize("n", [1, 2, 4, 7])
    def test_reflection_identity(self, n):
        # h(theta) + h(-theta) equals the full integral over [-pi/2, pi/2]
        full = beta_fn(0.5, (n + 1) / 2.0)
        for theta in (0.1, 0.5, 1.0):
            assert cap_integral(theta, n) + cap_integral(-theta, n) == pytest.approx(
                full, abs=1e-10)

    def test_domain_guard(self):
        with pytest.raises(BadParameter):
            cap_integral(2.0, 1)


class TestBallSumRadial:
    def test_dim1_triangle(self):
        bp = BallPair(1, 1.0, 1.0)
        assert ball_sum_radial(bp, 0.0) == pytest.approx(0.5, abs=1e-12)
        assert ball_sum_radial(bp, 1.0) == pytest.approx(0.25, abs=1e-10)
        assert ball_sum_radial(bp, 2.0) == pytest.approx(0.0, abs=1e-12)
        assert ball_sum_radial(bp, 2.5) == 0.0

    def test_symmetric_in_radii(self):
        for n in (1, 2, 3):
            a = BallPair(n, 0.7, 1.3)
            b = BallPair(n, 1.3, 0.7)
            for r in (0.0, 0.5, 0.61, 1.4, 1.9):
                assert ball_sum_radial(a, r) == pytest.approx(
                    ball_sum_radial(b, r), rel=1e-12)

    def test_continuity_at_breakpoint(self):
        # the two analytic branches meet at r = |r1 - r2|
        for n in (1, 2, 3, 6):
            bp = BallPair(n, 1.0, 0.4)
            left = ball_sum_radial(bp, 0.6 - 1e-9)
            right = ball_sum_radial(bp, 0.6 + 1e-9)
            assert left == pytest.approx(right, rel=1e-6)

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_density_integrates_to_one(self, n):
        bp = BallPair(n, 1.0, 0.5)
        surface = n * unit_ball_volume(n)

        def radial_mass(r):
            return ball_sum_radial(bp, r) * surface * r ** (n - 1)

        total, _ = integrate.quad(radial_mass, 0.0, 0.5, limit=200)
        rest, _ = integrate.quad(radial_mass, 0.5, 1.5, limit=200)
        assert total + rest == pytest.approx(1.0, abs=1e-8)


class TestBallSumEntropy:
    def test_dim1_half_balls(self):
        # two uniforms on [-1/2, 1/2]: the unit triangle, h = 1/2
        assert ball_sum_entropy(BallPair(1, 0.5, 0.5)) == pytest.approx(0.5,
                                                                        abs=1e-9)

    def test_dim1_unit_balls(self):
        assert ball_sum_entropy(BallPair(1, 1.0, 1.0)) == pytest.approx(
            math.log(2.0) + 0.5, abs=1e-9)

    def test_dim1_grid_convolution_cross_check(self):
        # independent route: discretize both uniforms and convolve; both
        # radii are multiples of 1/2048 so a dx of 1/1024 fits exactly
        for r1, r2 in ((0.5, 0.5), (1.0, 0.25), (0.8125, 0.75)):
            f = uniform_interval(-r1, r1, cells=round(2048 * r1))
            g = uniform_interval(-r2, r2, cells=round(2048 * r2))
            h_grid = renyi_entropy(convolve(f, g), 1.0)
            assert ball_sum_entropy(BallPair(1, r1, r2)) == pytest.approx(
                h_grid, abs=5e-4)

    def test_scaling_identity(self):
        for n in (1, 2, 4):
            base = ball_sum_entropy(BallPair(n, 1.0, 0.6))
            scaled = ball_sum_entropy(BallPair(n, 2.5, 1.5))
            assert scaled == pytest.approx(base + n * math.log(2.5), rel=1e-9)

    def test_high_dimension_finite(self):
        h = ball_sum_entropy(BallPair(64, 1.0, 1.0))
        assert math.isfinite(h)
        # entropy of the sum exceeds that of a single ball
        single = 64.0 * math.log(1.0) + math.log(unit_ball_volume(64))
        assert h > single

    def test_validation(self):
        with pytest.raises(BadParameter):
            BallPair(1, 0.0, 1.0)
        with pytest.raises(BadParameter):
            BallPair(-2, 1.0, 1.0)


class TestEpiGap:
    def test_dim2_matches_direct_composition(self):
        lam = 0.5
        bp = BallPair(2, math.sqrt(lam), math.sqrt(1.0 - lam))
        expected = ball_sum_entropy(bp) - math.log(math.pi)
        assert epi_gap_balls(2, 1.0, 1.0, lam) == pytest.approx(expected, rel=1e-12)

    def test_concavity_term_vanishes_for_equal_radii(self):
        # with b1 = b2 the whole gap is the entropy difference itself
        lam = 0.3
        bp = BallPair(3, math.sqrt(lam) * 0.8, math.sqrt(1.0 - lam) * 0.8)
        h1 = math.log(unit_ball_volume(3) * 0.8 ** 3)
        assert epi_gap_balls(3, 0.8, 0.8, lam) == pytest.approx(
            ball_sum_entropy(bp) - h1, rel=1e-12)

    def test_gap_positive(self):
        for m in (2, 3, 5, 9):
            assert epi_gap_balls(m, 1.0, 1.0, 0.5) > 0.0

    def test_lambda_validation(self):
        with pytest.raises(BadParameter):
            epi_gap_balls(2, 1.0, 1.0, 0.0)
        with pytest.raises(BadParameter):
            epi_gap_balls(2, 1.0, 1.0, 1.0)


class TestBrunnMinkowski:
    def test_interval_case(self):
        f = uniform_interval(-1.0, 1.0, cells=128)
        g = uniform_interval(-0.5, 0.5, cells=64)
        rep = brunn_minkowski_check(f, g)
        assert rep.passed
        # the grid convolution loses exactly one cell of support
        assert rep.lhs == pytest.approx(rep.rhs - f.dx, abs=1e-12)

    def test_union_of_intervals(self):
        dx = 1.0 / 32
        a = np.zeros(96)
        a[:32] = 1.0
        a[64:] = 1.0
        f = make_grid(0.0, dx, a / (a.sum() * dx))
        g = uniform_interval(0.0, 0.75, cells=24)
        rep = brunn_minkowski_check(f, g)
        assert rep.passed

    def test_rejects_smooth_density(self):
        f = gaussian_on_grid(0.0, 1.0, -4.0, 8.0 / 256, 256)
        g = uniform_interval(0.0, 1.0, cells=32)
        with pytest.raises(NotIndicator):
            brunn_minkowski_check(f, g)
