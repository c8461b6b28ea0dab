"""Brute-force cross-checks for the closed-form distances, plus limit probes.

Nothing here shares an evaluation path with the results it validates: the
analog oracle is a plain midpoint Riemann sum of |h|^2 (no adaptive
quadrature, no sine integral) and the digital oracle sums |c_k|^2 from the
defining complex-exponential difference (no half-angle magnitude form).
Each oracle returns its value together with the analytic bound on what the
finite grid or index cutoff can miss.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analog import delayed_distance_si, impulse_response
from .digital import delayed_report_digital
from .errors import DomainError, NonMonotoneLadder
from .kernel import TWO_PI, BandpassInterval
from .signals import AnalogDelay, DigitalDelay

__all__ = [
    "OracleDistance",
    "LimitProbeResult",
    "analog_distance_oracle",
    "digital_distance_oracle",
    "limit_probe",
    "PROBE_QUANTITIES",
]

_CHUNK = 1 << 20

PROBE_QUANTITIES = (
    "dT_vs_T",
    "dT_vs_bandwidth",
    "thetaN_vs_N",
    "theta_vs_bandwidth",
)


@dataclass(frozen=True)
class OracleDistance:
    """Brute-force distance plus the analytic bound on the truncated part."""

    value: float
    tail_bound: float


def analog_distance_oracle(
    band: BandpassInterval,
    delay: AnalogDelay,
    grid_radius: float,
    dt: float,
) -> OracleDistance:
    """Riemann-sum distance to the delay-T filters, from the kernel samples.

    sqrt(dt * sum over midpoints t in [-R, -T) of |h(t)|^2); everything the
    grid cannot see beyond -R has energy at most 2 / (pi R).
    """
    if band.mode != "analog":
        raise ValueError("expected an analog band")
    if not dt > 0.0:
        raise DomainError("dt must be positive")
    if grid_radius < delay.T:
        raise DomainError("grid radius must reach the truncation point")
    m = int(round((grid_radius - delay.T) / dt))
    tail = 2.0 / (math.pi * grid_radius)
    if m <= 0:
        return OracleDistance(0.0, tail)
    parts = []
    for start in range(0, m, _CHUNK):
        j = np.arange(start, min(start + _CHUNK, m), dtype=np.float64)
        t = -grid_radius + (j + 0.5) * dt
        vals = impulse_response(band, t)
        parts.append(float(np.sum(vals.real**2 + vals.imag**2)))
    return OracleDistance(math.sqrt(dt * math.fsum(parts)), tail)


def digital_distance_oracle(
    band: BandpassInterval, delay: DigitalDelay, max_index: int
) -> OracleDistance:
    """Partial-sum distance to the N-tap filters, from the defining c_k.

    sqrt(sum_{k=N+1}^{K} |c_k|^2) with
    c_k = (exp(-i k a) - exp(-i k b)) / (2 pi i k) evaluated literally; the
    indices beyond K contribute at most 2/(K pi) / (2 pi) in energy.
    """
    if band.mode != "digital":
        raise ValueError("expected a digital band")
    N = delay.N
    if max_index <= N:
        raise DomainError("max_index must exceed the look-ahead")
    parts = []
    for start in range(N + 1, max_index + 1, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, max_index + 1), dtype=np.float64)
        ck = (np.exp(-1j * k * band.a) - np.exp(-1j * k * band.b)) / (TWO_PI * 1j * k)
        parts.append(float(np.sum(ck.real**2 + ck.imag**2)))
    tail = 2.0 / (max_index * math.pi) / TWO_PI
    return OracleDistance(math.sqrt(math.fsum(parts)), tail)


@dataclass(frozen=True)
class LimitProbeResult:
    """Ladder of (parameter, value) rows with an extrapolated limit.

    fitted_limit is None when the last three values oscillate too much for
    the extrapolation to be trusted.  For the bandwidth-to-infinity probe
    of d(T), candidate_limit carries the sine-integral heuristic
    1 / sqrt(pi T) and reference_bracket the interval (0, 2 pi / T); both
    are reported for comparison only, neither is asserted.
    """

    quantity: str
    rows: tuple[tuple[float, float], ...]
    fitted_limit: float | None
    candidate_limit: float | None = None
    reference_bracket: tuple[float, float] | None = None


def _extrapolate(values: list[float]) -> float | None:
    """Aitken delta-squared on the last three values.

    Exact for geometric convergence.  Returns None when the tail is
    oscillating (sign-alternating steps beyond 1e-3 of the value scale),
    falls back to the last value when the steps have already collapsed or
    the acceleration would overshoot.
    """
    v1, v2, v3 = values[-3:]
    d1 = v2 - v1
    d2 = v3 - v2
    scale = max(abs(v1), abs(v2), abs(v3), 1e-300)
    if d1 * d2 < 0.0 and min(abs(d1), abs(d2)) > 1e-3 * scale:
        return None
    denom = d2 - d1
    if abs(denom) <= 1e-14 * scale:
        return v3
    correction = d2 * d2 / denom
    if abs(correction) > 10.0 * abs(d2) + 1e-14 * scale:
        return v3
    return v3 - correction


def _check_ladder(ladder) -> list[float]:
    vals = [float(x) for x in ladder]
    if len(vals) < 4:
        raise NonMonotoneLadder("ladder needs at least four rungs")
    if any(not math.isfinite(x) for x in vals):
        raise NonMonotoneLadder("ladder rungs must be finite")
    steps = [b - a for a, b in zip(vals, vals[1:])]
    if not (all(s > 0.0 for s in steps) or all(s < 0.0 for s in steps)):
        raise NonMonotoneLadder("ladder must be strictly monotone")
    return vals


def _digital_band_of_width(c: float) -> BandpassInterval:
    if not 0.0 < c < TWO_PI:
        raise DomainError("digital bandwidth must lie in (0, 2 pi)")
    return BandpassInterval.digital(math.pi - 0.5 * c, math.pi + 0.5 * c)


def limit_probe(
    quantity: str,
    ladder,
    band: BandpassInterval | None = None,
    delay: AnalogDelay | DigitalDelay | None = None,
) -> LimitProbeResult:
    """Evaluate a distance or angle along a parameter ladder and fit its limit.

    quantity selects what varies and what is measured:

    * ``dT_vs_T``: distance to the delay-T filters as T runs over the
      ladder, for the fixed analog band (required).
    * ``dT_vs_bandwidth``: the same distance as the bandwidth runs over the
      ladder, at fixed AnalogDelay (required); reports the unproven
      candidate limit and bracket alongside.
    * ``thetaN_vs_N``: digital angle as the look-ahead N runs over the
      ladder, for the fixed digital band (required).
    * ``theta_vs_bandwidth``: angle as the bandwidth runs over the ladder;
      digital causal by default, digital with look-ahead if delay is a
      DigitalDelay, analog delay-T if delay is an AnalogDelay.
    """
    rungs = _check_ladder(ladder)
    values: list[float] = []

    if quantity == "dT_vs_T":
        if band is None or band.mode != "analog":
            raise DomainError("dT_vs_T needs an analog band")
        for T in rungs:
            values.append(delayed_distance_si(band, AnalogDelay(T)))
    elif quantity == "dT_vs_bandwidth":
        if not isinstance(delay, AnalogDelay):
            raise DomainError("dT_vs_bandwidth needs an AnalogDelay")
        for c in rungs:
            if c <= 0.0:
                raise DomainError("bandwidth rungs must be positive")
            values.append(delayed_distance_si(BandpassInterval.analog(0.0, c), delay))
    elif quantity == "thetaN_vs_N":
        if band is None or band.mode != "digital":
            raise DomainError("thetaN_vs_N needs a digital band")
        for N in rungs:
            if N != int(N) or N < 0:
                raise DomainError("look-ahead rungs must be nonnegative integers")
            values.append(
                delayed_report_digital(band, DigitalDelay(int(N))).angle
            )
    elif quantity == "theta_vs_bandwidth":
        if isinstance(delay, AnalogDelay):
            for c in rungs:
                if c <= 0.0:
                    raise DomainError("bandwidth rungs must be positive")
                b = BandpassInterval.analog(0.0, c)
                d = delayed_distance_si(b, delay)
                values.append(math.asin(min(1.0, d / math.sqrt(c))))
        else:
            dd = delay if isinstance(delay, DigitalDelay) else DigitalDelay(0)
            for c in rungs:
                values.append(
                    delayed_report_digital(_digital_band_of_width(c), dd).angle
                )
    else:
        raise DomainError(f"unknown probe quantity {quantity!r}")

    result_extra: dict = {}
    if quantity == "dT_vs_bandwidth":
        assert isinstance(delay, AnalogDelay)
        if delay.T > 0.0:
            result_extra["candidate_limit"] = 1.0 / math.sqrt(math.pi * delay.T)
            result_extra["reference_bracket"] = (0.0, TWO_PI / delay.T)

    return LimitProbeResult(
        quantity=quantity,
        rows=tuple(zip(rungs, values)),
        fitted_limit=_extrapolate(values),
        **result_extra,
    )
