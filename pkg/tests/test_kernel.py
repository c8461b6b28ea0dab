"""Numeric primitives: oscillatory kernel, sine integral, quadrature, tail sums.

Every closed form used downstream is checked here against an independent
brute-force route (direct formula evaluation, literal partial summation, or
quadrature of the defining integrand).
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from causalgap import (
    BandpassInterval,
    BudgetExceeded,
    QuadratureConfig,
    SeriesConfig,
    coefficient_tail_sum,
    integrate_adaptive,
    oscillatory_kernel,
    sine_integral,
)

TWO_PI = 2.0 * math.pi


class TestBandpassInterval:
    def test_bandwidth_and_center(self):
        band = BandpassInterval.analog(-1.0, 3.0)
        assert band.bandwidth == 4.0
        assert band.center == 1.0
        assert band.mode == "analog"

    def test_rejects_empty_or_reversed_band(self):
        with pytest.raises(ValueError):
            BandpassInterval.analog(2.0, 2.0)
        with pytest.raises(ValueError):
            BandpassInterval.analog(3.0, 1.0)

    def test_digital_band_range(self):
        BandpassInterval.digital(1e-9, TWO_PI - 1e-9)
        with pytest.raises(ValueError):
            BandpassInterval.digital(0.0, 1.0)
        with pytest.raises(ValueError):
            BandpassInterval.digital(1.0, TWO_PI)
        with pytest.raises(ValueError):
            BandpassInterval.digital(-0.5, 1.0)

    def test_rejects_nonfinite_edges(self):
        with pytest.raises(ValueError):
            BandpassInterval.analog(0.0, math.inf)
        with pytest.raises(ValueError):
            BandpassInterval.analog(math.nan, 1.0)

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            BandpassInterval(0.0, 1.0, mode="mixed")


class TestConfigs:
    def test_quadrature_config_defaults(self):
        cfg = QuadratureConfig()
        assert cfg.abs_tolerance > 0 and cfg.rel_tolerance > 0
        assert cfg.max_subdivisions >= 1

    def test_quadrature_config_validation(self):
        with pytest.raises(ValueError):
            QuadratureConfig(abs_tolerance=0.0)
        with pytest.raises(ValueError):
            QuadratureConfig(rel_tolerance=-1e-3)
        with pytest.raises(ValueError):
            QuadratureConfig(max_subdivisions=0)

    def test_series_config_validation(self):
        with pytest.raises(ValueError):
            SeriesConfig(tail_bound_target=0.0)
        with pytest.raises(ValueError):
            SeriesConfig(max_terms=0)


class TestOscillatoryKernel:
    def test_value_at_origin(self):
        # removable singularity: the limit is c^2 / (2 pi)
        assert oscillatory_kernel(2.0, 0.0) == pytest.approx(2.0 / math.pi, rel=1e-15)

    def test_direct_evaluation(self):
        # (1 - cos(pi)) / (pi (pi/2)^2) = 8 / pi^3
        expected = 8.0 / math.pi**3
        assert oscillatory_kernel(2.0, 0.5 * math.pi) == pytest.approx(expected, rel=1e-14)

    def test_matches_naive_formula_away_from_origin(self):
        # independent route: the defining expression, cancellation and all
        rng = np.random.default_rng(42)
        for _ in range(300):
            c = float(rng.uniform(0.05, 15.0))
            t = float(rng.uniform(0.1, 50.0)) * (1.0 if rng.random() < 0.5 else -1.0)
            naive = (1.0 - math.cos(c * t)) / (math.pi * t * t)
            assert oscillatory_kernel(c, t) == pytest.approx(naive, rel=1e-9, abs=1e-15)

    @given(st.floats(0.01, 20.0), st.floats(-100.0, 100.0))
    def test_even_and_bounded(self, c, t):
        v = oscillatory_kernel(c, t)
        assert v == oscillatory_kernel(c, -t)  # exact: only |t| and t^2 enter
        assert 0.0 <= v <= (c * c / TWO_PI) * (1.0 + 1e-12)

    def test_small_argument_branch_is_seamless(self):
        # the Taylor branch takes over below |c t| = 1e-4; no jump allowed
        for c in (0.5, 1.0, math.pi, 6.0):
            t_switch = 1e-4 / c
            below = oscillatory_kernel(c, t_switch * (1.0 - 1e-9))
            above = oscillatory_kernel(c, t_switch * (1.0 + 1e-9))
            assert abs(below - above) <= 1e-10 * oscillatory_kernel(c, 0.0)

    def test_rejects_nonpositive_bandwidth(self):
        with pytest.raises(ValueError):
            oscillatory_kernel(0.0, 1.0)
        with pytest.raises(ValueError):
            oscillatory_kernel(-2.0, 1.0)


class TestSineIntegral:
    def test_at_zero(self):
        assert sine_integral(0.0) == 0.0

    def test_against_quadrature_oracle(self):
        # independent route: adaptive quadrature of sin(u)/u itself
        def sinc(u):
            return math.sin(u) / u if u != 0.0 else 1.0

        for x in (0.5, 1.0, math.pi, 10.0, 50.0):
            res = integrate_adaptive(sinc, 0.0, x)
            assert res.converged
            assert abs(sine_integral(x) - res.value) <= 1e-12

    @given(st.floats(-1e4, 1e4))
    def test_odd(self, x):
        assert sine_integral(-x) == -sine_integral(x)

    def test_large_argument_asymptote(self):
        assert abs(sine_integral(1e4) - 0.5 * math.pi) < 1e-3


class TestIntegrateAdaptive:
    def test_constant(self):
        res = integrate_adaptive(lambda t: 1.0, 0.0, 3.0)
        assert res.converged
        assert res.value == pytest.approx(3.0, abs=1e-13)

    def test_sin_over_half_period(self):
        res = integrate_adaptive(math.sin, 0.0, math.pi)
        assert res.converged
        assert res.value == pytest.approx(2.0, abs=1e-10)

    def test_polynomials(self):
        res = integrate_adaptive(lambda x: x**5, 0.0, 1.0)
        assert res.value == pytest.approx(1.0 / 6.0, abs=1e-13)
        res = integrate_adaptive(lambda x: x**3 - 2.0 * x + 1.0, -1.0, 2.0)
        assert res.value == pytest.approx(3.75, abs=1e-12)

    def test_gaussian_against_erf(self):
        res = integrate_adaptive(lambda x: math.exp(-x * x), 0.0, 1.0)
        expected = 0.5 * math.sqrt(math.pi) * math.erf(1.0)
        assert res.value == pytest.approx(expected, abs=1e-12)

    def test_zero_width_interval(self):
        res = integrate_adaptive(math.sin, 2.0, 2.0)
        assert res.value == 0.0 and res.converged and res.subdivisions == 0

    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            integrate_adaptive(math.sin, 1.0, 0.0)
        with pytest.raises(ValueError):
            integrate_adaptive(math.sin, 0.0, math.inf)

    def test_budget_exhaustion_is_flagged_not_fatal(self):
        cfg = QuadratureConfig(abs_tolerance=1e-14, rel_tolerance=1e-14, max_subdivisions=4)
        res = integrate_adaptive(lambda t: oscillatory_kernel(4.0, t), -30.0, 30.0, cfg)
        assert not res.converged
        assert res.error_estimate > max(cfg.abs_tolerance, cfg.rel_tolerance * abs(res.value))

    def test_kernel_mass_converges_to_bandwidth(self):
        # total mass of the width-c kernel is c; probe a wide window
        c = 2.0
        cfg = QuadratureConfig(abs_tolerance=5e-4, rel_tolerance=1e-12, max_subdivisions=2**18)
        radius = 1e6 / c
        res = integrate_adaptive(lambda t: oscillatory_kernel(c, t), -radius, radius, cfg)
        assert res.converged
        assert abs(res.value - c) <= 1e-3

    def test_antiderivative_identity(self):
        # quadrature over [0, T] must match the Si-based closed form
        for c in (0.5, 1.0, math.pi, 6.0):
            for T in (0.1, 1.0, 10.0):
                quad = integrate_adaptive(lambda t: oscillatory_kernel(c, t), 0.0, T)
                s = math.sin(0.5 * c * T)
                closed = (c * sine_integral(c * T) - 2.0 * s * s / T) / math.pi
                assert quad.converged
                assert abs(quad.value - closed) <= 1e-8


class TestCoefficientTailSum:
    def test_half_circle_full_tail(self):
        # Parseval pins the full tail at c/2 - c^2/(4 pi); pi/4 at c = pi
        res = coefficient_tail_sum(math.pi, 1)
        assert abs(res.value - 0.25 * math.pi) <= 1e-11
        assert res.tail_bound <= 1e-12
        assert res.terms_used >= 1

    def test_parseval_identity_across_bandwidths(self):
        # 2 * tail(c, 1) + c^2 / (2 pi) = c
        for c in (0.1, 1.0, math.pi, 5.0):
            res = coefficient_tail_sum(c, 1)
            assert abs(2.0 * res.value + c * c / TWO_PI - c) <= 1e-9

    def test_against_direct_partial_sum(self):
        # dumb oracle: literal (1 - cos k c) / (pi k^2), one million terms
        for c, start in ((1.0, 1), (math.pi, 3), (6.0, 2)):
            res = coefficient_tail_sum(c, start)
            k = np.arange(start, start + 10**6, dtype=np.float64)
            dumb = float(np.sum((1.0 - np.cos(c * k)) / (math.pi * k * k)))
            # what the dumb sum left out is at most the comparison bound
            slack = 2.0 / (math.pi * (start + 10**6 - 1))
            assert abs(res.value - dumb) <= slack

    def test_far_tail_is_small(self):
        res = coefficient_tail_sum(math.pi, 10**6)
        assert 0.0 < res.value <= 2.0 / (math.pi * 10**6)

    def test_honest_near_full_circle(self):
        # cosine sums mix slowly near c = 2 pi; needs a looser target
        cfg = SeriesConfig(tail_bound_target=1e-8, max_terms=10**7)
        c = TWO_PI - 1e-3
        res = coefficient_tail_sum(c, 1, cfg)
        assert res.tail_bound <= 1e-8
        expected = 0.5 * c - c * c / (4.0 * math.pi)
        assert abs(res.value - expected) <= 1e-7

    def test_budget_exceeded(self):
        cfg = SeriesConfig(tail_bound_target=1e-12, max_terms=10**5)
        with pytest.raises(BudgetExceeded):
            coefficient_tail_sum(TWO_PI - 1e-3, 1, cfg)

    def test_rejects_bad_domain(self):
        with pytest.raises(ValueError):
            coefficient_tail_sum(0.0, 1)
        with pytest.raises(ValueError):
            coefficient_tail_sum(TWO_PI, 1)
        with pytest.raises(ValueError):
            coefficient_tail_sum(1.0, 0)

    @settings(max_examples=30)
    @given(st.floats(0.5, 6.0), st.integers(1, 500))
    def test_tail_decreases_in_start_index(self, c, m):
        cfg = SeriesConfig(tail_bound_target=1e-9, max_terms=10**7)
        a = coefficient_tail_sum(c, m, cfg)
        b = coefficient_tail_sum(c, m + 1, cfg)
        assert b.value <= a.value + 2e-9
        assert a.value >= -1e-12
