"""Tests for the closed-form solution chain.

Reference values were computed independently with 40-digit mpmath before
the implementation and frozen here.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from flatdisk import closedform as cf

TWO_LN2 = 2 * math.log(2)
# mpmath, 40 digits
F_QUARTER_PI = 0.6693948816513365819727208843362434229369
G_QUARTER_PI = 0.4733336601072265328449263293238894538328
H_QUARTER_PI = 1.085267485459641239866389011446608696613
BETA_HALF = 0.5358983848622454129451073169882552661144
POLE_SLOPE = 0.5 * (1 + math.log(2))


class TestColatitude:
    def test_clamps_float_noise(self):
        assert cf.clamp_colatitude(-1e-13) == 0.0
        assert cf.clamp_colatitude(math.pi / 2 + 1e-13) == math.pi / 2

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            cf.clamp_colatitude(-1e-6)
        with pytest.raises(ValueError):
            cf.clamp_colatitude(math.pi / 2 + 1e-6)


class TestEvalF:
    def test_equator_is_two_ln2(self):
        assert cf.eval_f(math.pi / 2) == pytest.approx(TWO_LN2, abs=1e-14)

    def test_pole_is_zero(self):
        assert cf.eval_f(0.0) == 0.0

    def test_quarter_pi(self):
        assert cf.eval_f(math.pi / 4) == pytest.approx(F_QUARTER_PI, abs=1e-14)

    def test_tiny_angle_slope(self):
        assert cf.eval_f(1e-9) / 1e-9 == pytest.approx(POLE_SLOPE, rel=1e-12)

    def test_small_angle_branch_matches_reference(self):
        # mpmath 30-digit reference on both sides of the branch switch; the
        # Taylor branch avoids the ~8-digit cancellation of the direct form
        taylor_side = {
            0.5e-4: 4.23286795150046076347588967229e-5,
            0.9e-4: 7.61916231310643845441889015335e-5,
        }
        for t, want in taylor_side.items():
            assert cf.eval_f(t) == pytest.approx(want, rel=1e-12)
        # just above the switch the direct form is cancellation-limited
        direct_side = {
            1.1e-4: 9.31230949415086127695754561917e-5,
            2.0e-4: 1.69314718120376925052569560032e-4,
        }
        for t, want in direct_side.items():
            assert cf.eval_f(t) == pytest.approx(want, rel=1e-6)

    def test_strictly_increasing(self):
        f = cf.eval_f(np.linspace(0, math.pi / 2, 10_000))
        assert np.all(np.diff(f) > 0)

    def test_finite_and_nonnegative(self):
        f = cf.eval_f(np.linspace(0, math.pi / 2, 1000))
        assert np.all(np.isfinite(f)) and np.all(f >= 0)


class TestDerivatives:
    def test_prime_at_equator(self):
        assert cf.eval_f_prime(math.pi / 2) == pytest.approx(1.0, abs=1e-13)

    def test_prime_at_pole(self):
        assert cf.eval_f_prime(0.0) == pytest.approx(POLE_SLOPE, abs=1e-14)

    def test_prime_matches_finite_difference(self):
        t = np.linspace(0.01, math.pi / 2 - 0.01, 200)
        step = 1e-6
        fd = (cf.eval_f(t + step) - cf.eval_f(t - step)) / (2 * step)
        assert np.max(np.abs(fd - cf.eval_f_prime(t))) < 1e-8

    def test_second_matches_finite_difference(self):
        # step balances truncation against rounding amplified by 1/step^2
        t = np.linspace(0.05, math.pi / 2 - 0.01, 200)
        step = 3e-4
        fd = (cf.eval_f(t + step) - 2 * cf.eval_f(t) + cf.eval_f(t - step)) / step**2
        assert np.max(np.abs(fd - cf.eval_f_second(t))) < 1e-5

    def test_endpoint_slopes_by_finite_difference(self):
        step = 1e-6
        near_pole = (cf.eval_f(2 * step) - cf.eval_f(0.0)) / (2 * step)
        assert near_pole == pytest.approx(POLE_SLOPE, abs=1e-6)
        equator = (cf.eval_f(math.pi / 2) - cf.eval_f(math.pi / 2 - 2 * step)) / (2 * step)
        assert equator == pytest.approx(1.0, abs=1e-6)


class TestMathematicaForm:
    def test_equator(self):
        assert cf.eval_f_mathematica_form(math.pi / 2) == pytest.approx(TWO_LN2, abs=1e-13)

    def test_agrees_with_main_form(self):
        t = np.linspace(1e-3, math.pi / 2, 1000)
        gap = np.abs(cf.eval_f(t) - cf.eval_f_mathematica_form(t))
        assert np.max(gap) < 1e-12

    def test_singular_at_zero(self):
        with pytest.raises(ValueError):
            cf.eval_f_mathematica_form(0.0)


class TestSubstitutionChain:
    def test_g_boundary_values(self):
        assert cf.eval_g(0.0) == 0.0
        assert cf.eval_g(math.pi / 2) == pytest.approx(TWO_LN2, abs=1e-14)
        assert cf.eval_g(math.pi / 4) == pytest.approx(G_QUARTER_PI, abs=1e-14)

    def test_g_increasing(self):
        g = cf.eval_g(np.linspace(0, math.pi / 2, 2000))
        assert np.all(np.diff(g) > 0)

    def test_h_values(self):
        assert cf.eval_h(0.0) == 0.0
        assert cf.eval_h(math.pi / 2) == pytest.approx(1.0, abs=1e-14)
        assert cf.eval_h(math.pi / 4) == pytest.approx(H_QUARTER_PI, abs=1e-14)

    def test_h_is_derivative_of_g(self):
        t = np.linspace(0.01, math.pi / 2 - 0.01, 500)
        step = 1e-5
        fd = (cf.eval_g(t + step) - cf.eval_g(t - step)) / (2 * step)
        assert np.max(np.abs(fd - cf.eval_h(t))) < 1e-8

    def test_gamma_values(self):
        assert cf.eval_gamma(math.pi / 2) == pytest.approx(1.0)
        assert cf.eval_gamma(math.pi / 6) == pytest.approx(2.0)
        with pytest.raises(ValueError):
            cf.eval_gamma(0.0)

    def test_f_equals_gamma_times_g(self):
        t = np.linspace(1e-3, math.pi / 2, 2000)
        gap = np.abs(cf.eval_f(t) - cf.eval_gamma(t) * cf.eval_g(t))
        assert np.max(gap) < 1e-13


class TestBetaSolutions:
    def test_regular_values(self):
        assert cf.eval_beta_regular(0.0) == 0.0
        assert cf.eval_beta_regular(1.0) == pytest.approx(2.0)
        assert cf.eval_beta_regular(0.5) == pytest.approx(BETA_HALF, abs=1e-14)

    def test_regular_is_odd(self):
        x = np.linspace(0, 1, 50)
        assert np.allclose(cf.eval_beta_regular(-x), -cf.eval_beta_regular(x))

    def test_regular_domain(self):
        with pytest.raises(ValueError):
            cf.eval_beta_regular(1.0 + 1e-9)

    def test_singular_values(self):
        assert cf.eval_beta_singular(1.0) == 1.0
        assert cf.eval_beta_singular(0.5) == 2.0
        with pytest.raises(ValueError):
            cf.eval_beta_singular(0.0)

    @pytest.mark.parametrize("beta", [cf.eval_beta_regular, cf.eval_beta_singular])
    def test_both_satisfy_homogeneous_ode(self, beta):
        # x^2 (1-x^2) b'' + x (1-2x^2) b' - b = 0.  Five-point stencils with a
        # scale-relative step keep the 1/x candidate accurate near x = 0.05.
        x = np.linspace(0.05, 0.95, 200)
        h = 1e-3 * x
        b = beta(x)
        bm2, bm1, bp1, bp2 = (beta(x + k * h) for k in (-2, -1, 1, 2))
        b1 = (bm2 - 8 * bm1 + 8 * bp1 - bp2) / (12 * h)
        b2 = (-bm2 + 16 * bm1 - 30 * b + 16 * bp1 - bp2) / (12 * h * h)
        resid = x**2 * (1 - x**2) * b2 + x * (1 - 2 * x**2) * b1 - b
        assert np.max(np.abs(resid)) < 1e-6


class TestSeries:
    def test_first_coefficients(self):
        sc = cf.series_coefficients(5)
        assert sc.coefficient(1) == Fraction(1)
        assert sc.coefficient(3) == Fraction(1, 4)
        assert sc.coefficient(5) == Fraction(1, 8)
        assert sc.coefficient(2) == Fraction(0)

    def test_recurrence_exact_in_rationals(self):
        sc = cf.series_coefficients(201)
        for j in range(3, 202, 2):
            assert (j + 1) * sc.coefficient(j) == (j - 2) * sc.coefficient(j - 2)

    def test_rejects_even_or_nonpositive(self):
        for bad in (0, -3, 4):
            with pytest.raises(ValueError):
                cf.series_coefficients(bad)

    def test_partial_sum_at_zero(self):
        assert cf.eval_beta_series(0.0, 7) == 0.0

    def test_convergence_moderate(self):
        # terms through j = 9
        got = cf.eval_beta_series(0.5, 5)
        assert got == pytest.approx(cf.eval_beta_regular(0.5), abs=1e-4)

    def test_convergence_near_edge(self):
        # terms through j = 201
        got = cf.eval_beta_series(0.9, 101)
        assert got == pytest.approx(cf.eval_beta_regular(0.9), abs=1e-6)

    def test_series_domain(self):
        with pytest.raises(ValueError):
            cf.eval_beta_series(1.0, 5)
        with pytest.raises(ValueError):
            cf.eval_beta_series(0.5, 0)
