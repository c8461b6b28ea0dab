"""Convolution operators: norm estimates, matched inputs, delay truncation."""

import math

import numpy as np
import pytest

from causalgap import (
    AnalogDelay,
    AnalogImpulseResponse,
    BandpassInterval,
    DigitalDelay,
    DigitalSequence,
    GridMismatch,
    SampledSignal,
    ZeroKernel,
    best_causal_coefficients,
    convolve_analog,
    convolve_digital,
    delayed_report,
    matched_input,
    operator_norm_estimate,
    truncate_to_delay,
    truncate_to_delay_analog,
)


def _seq(offset, values):
    return DigitalSequence(offset, np.asarray(values, dtype=np.complex128))


class TestConvolveDigital:
    def test_hand_computed_product(self):
        out = convolve_digital(_seq(0, [1.0, 2.0]), _seq(5, [3.0, 4.0]))
        assert out.offset == 5
        assert np.array_equal(out.values, np.array([3.0, 10.0, 8.0], dtype=complex))

    def test_unit_impulse_is_identity(self):
        h = _seq(-2, [1.0, -1.5j, 0.25])
        out = convolve_digital(h, _seq(0, [1.0]))
        assert out.offset == h.offset
        assert np.array_equal(out.values, h.values)

    def test_offsets_add(self):
        h = _seq(3, [1.0, 1.0])
        f = _seq(-7, [2.0])
        assert convolve_digital(h, f).offset == -4

    def test_shift_commutes_with_convolution(self):
        rng = np.random.default_rng(5)
        h = _seq(-1, rng.normal(size=6) + 1j * rng.normal(size=6))
        f = _seq(2, rng.normal(size=4) + 1j * rng.normal(size=4))
        for m in (-3, 0, 11):
            a = convolve_digital(h.shifted(m), f)
            b = convolve_digital(h, f).shifted(m)
            assert a.offset == b.offset
            assert np.array_equal(a.values, b.values)


class TestConvolveAnalog:
    def test_box_convolution_is_a_triangle(self):
        dt = 0.01
        box = SampledSignal(0.0, dt, np.ones(100))
        out = convolve_analog(box, box)
        assert out.t0 == 0.0 and out.dt == dt and len(out) == 199
        # rising edge of the triangle: dt * (k + 1)
        for k in (0, 10, 99):
            assert out.values[k].real == pytest.approx(dt * (k + 1), rel=1e-12)
        assert float(np.max(out.values.real)) == pytest.approx(1.0, rel=1e-12)

    def test_time_offsets_add(self):
        f = SampledSignal(-1.0, 0.5, np.ones(3))
        g = SampledSignal(2.0, 0.5, np.ones(2))
        assert convolve_analog(f, g).t0 == 1.0

    def test_rejects_mismatched_grids(self):
        f = SampledSignal(0.0, 0.1, np.ones(3))
        g = SampledSignal(0.0, 0.2, np.ones(3))
        with pytest.raises(GridMismatch):
            convolve_analog(f, g)


class TestMatchedInput:
    def test_is_normalized_reflected_conjugate(self):
        h = _seq(7, [3.0, 4.0j])
        m = matched_input(h)
        assert m.offset == -(7 + 1)
        assert m.norm() == pytest.approx(1.0, rel=1e-15)
        assert np.allclose(m.values, np.array([-0.8j, 0.6]))

    def test_peak_output_attains_kernel_norm(self):
        h = _seq(-4, [3.0, 4.0])
        out = convolve_digital(h, matched_input(h))
        assert float(np.max(np.abs(out.values))) == pytest.approx(5.0, rel=1e-14)

    def test_rejects_zero_kernel(self):
        with pytest.raises(ZeroKernel):
            matched_input(_seq(0, [0.0, 0.0]))


class TestOperatorNormEstimate:
    def test_three_four_five(self):
        est = operator_norm_estimate(_seq(0, [3.0, 4.0]))
        assert est.upper == 5.0
        assert abs(est.lower - 5.0) <= 1e-12

    def test_unit_impulse(self):
        est = operator_norm_estimate(_seq(9, [1.0]))
        assert est.upper == 1.0
        assert abs(est.lower - 1.0) <= 1e-14

    def test_matched_input_closes_the_bracket(self):
        rng = np.random.default_rng(17)
        for i in range(30):
            n = int(rng.integers(1, 129))
            values = rng.normal(size=n) + 1j * rng.normal(size=n)
            h = _seq(int(rng.integers(-50, 50)), values)
            est = operator_norm_estimate(h, trials=4, seed=100 + i)
            assert est.upper == pytest.approx(h.norm(), rel=1e-15)
            assert abs(est.lower - est.upper) <= 1e-12 * est.upper
            # no probe may beat the analytic bound
            for ratio in est.ratios:
                assert ratio <= est.upper * (1.0 + 1e-12)

    def test_band_filter_taps(self):
        band = BandpassInterval.digital(1.0, 4.0)
        h = best_causal_coefficients(band, DigitalDelay(3), window=64)
        est = operator_norm_estimate(h)
        assert abs(est.lower - h.norm()) <= 1e-12

    def test_requires_a_trial(self):
        with pytest.raises(ValueError):
            operator_norm_estimate(_seq(0, [1.0]), trials=0)

    def test_rejects_zero_kernel(self):
        with pytest.raises(ZeroKernel):
            operator_norm_estimate(_seq(0, [0.0]))


class TestTruncateToDelay:
    def test_zeroes_strictly_left_of_lookahead(self):
        h = _seq(-3, [1.0, 2.0, 3.0, 4.0, 5.0, 6.0])  # indices -3 .. 2
        out = truncate_to_delay(h, DigitalDelay(1))
        assert out.offset == h.offset
        assert np.array_equal(
            out.values, np.array([0.0, 0.0, 3.0, 4.0, 5.0, 6.0], dtype=complex)
        )

    def test_causal_input_unchanged(self):
        h = _seq(0, [1.0, 2.0, 3.0])
        out = truncate_to_delay(h, DigitalDelay(0))
        assert np.array_equal(out.values, h.values)

    def test_residual_energy_shrinks_with_lookahead(self):
        rng = np.random.default_rng(23)
        h = _seq(-10, rng.normal(size=21))
        prev = math.inf
        for N in (0, 2, 5, 10):
            kept = truncate_to_delay(h, DigitalDelay(N))
            residual = h.norm() ** 2 - kept.norm() ** 2
            assert residual <= prev + 1e-15
            prev = residual
        assert prev == pytest.approx(0.0, abs=1e-15)


class TestTruncateToDelayAnalog:
    def test_boundary_sample_is_kept(self):
        sig = SampledSignal(-2.0, 0.5, np.ones(9))  # grid -2.0 .. 2.0
        out = truncate_to_delay_analog(sig, AnalogDelay(1.0))
        assert out.t0 == sig.t0 and out.dt == sig.dt
        t = out.times()
        assert np.all(out.values[t < -1.0] == 0.0)
        assert np.all(out.values[t >= -1.0] == 1.0)

    def test_sampled_residual_matches_delay_distance(self):
        band = BandpassInterval.analog(0.0, 2.0)
        T, dt, radius = 0.5, 1e-3, 1e3
        n = int(round(2.0 * radius / dt)) + 1
        sig = AnalogImpulseResponse(band).sample(-radius, dt, n)
        kept = truncate_to_delay_analog(sig, AnalogDelay(T))
        residual = sig.energy() - kept.energy()
        expected = delayed_report(band, AnalogDelay(T)).distance ** 2
        assert abs(residual - expected) <= max(1e-3, 5.0 * dt)
