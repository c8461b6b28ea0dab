"""Distances and angles for ideal digital bandpass filters on the circle.

The ideal band [a, b] inside (0, 2 pi) acts by multiplication on the
frequency side; its convolution kernel is the Fourier coefficient sequence
c_k of the indicator.  Keeping only the coefficients with index >= -N is
the best approximation among filters that look ahead at most N taps, so the
squared distance is the tail energy sum_{k > N} |c_k|^2.  Everything here
reduces to partial sums of (1 - cos(k c)) / (pi k^2) and their tails.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .analog import ApproximationReport
from .errors import DomainError, NegativeRadicand
from .kernel import TWO_PI, BandpassInterval
from .signals import DigitalDelay, DigitalSequence

__all__ = [
    "FourierCoefficientTable",
    "fourier_coefficient",
    "causal_report_digital",
    "delayed_report_digital",
    "best_causal_coefficients",
    "c0_ratio_angle",
    "DigitalDelay",
]


def _require_digital(band: BandpassInterval) -> None:
    if band.mode != "digital":
        raise ValueError("expected a digital band")


def fourier_coefficient(band: BandpassInterval, k: int) -> complex:
    """k-th Fourier coefficient of the band indicator, stable product form.

    c_0 = (b - a) / (2 pi); for k != 0,
    c_k = sin(k c / 2) / (pi k) * exp(-i k (a + b) / 2).
    """
    _require_digital(band)
    if k == 0:
        return complex(band.bandwidth / TWO_PI)
    amp = math.sin(0.5 * k * band.bandwidth) / (math.pi * k)
    return amp * cmath.exp(-1j * k * band.center)


@dataclass(frozen=True, eq=False)
class FourierCoefficientTable:
    """Coefficients c_k of a band indicator for k in [k_min, k_min + len)."""

    band: BandpassInterval
    k_min: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficient table must be a nonempty vector")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @classmethod
    def build(cls, band: BandpassInterval, k_min: int, k_max: int) -> "FourierCoefficientTable":
        """Table of c_k for k_min <= k <= k_max inclusive."""
        _require_digital(band)
        if k_max < k_min:
            raise ValueError("need k_min <= k_max")
        k = np.arange(k_min, k_max + 1)
        vals = np.empty(k.shape, dtype=np.complex128)
        nz = k != 0
        kk = k[nz].astype(np.float64)
        vals[nz] = (
            np.sin(0.5 * kk * band.bandwidth) / (math.pi * kk)
            * np.exp(-1j * kk * band.center)
        )
        vals[~nz] = band.bandwidth / TWO_PI
        return cls(band, k_min, vals)

    def __len__(self) -> int:
        return len(self.values)

    def indices(self) -> np.ndarray:
        return self.k_min + np.arange(len(self.values))

    def coefficient(self, k: int) -> complex:
        if not self.k_min <= k < self.k_min + len(self.values):
            raise IndexError(f"index {k} outside table range")
        return complex(self.values[k - self.k_min])

    def energy(self) -> float:
        """sum |c_k|^2 over the table window."""
        return float(np.sum(np.abs(self.values) ** 2))

    def parseval_defect(self) -> float:
        """(b - a) / (2 pi) minus the table energy; tends to 0 as the window grows."""
        return self.band.bandwidth / TWO_PI - self.energy()


_SUM_CHUNK = 1 << 22


def _bracket(band: BandpassInterval, N: int) -> float:
    """Normalized tail fraction sin^2(angle) after N taps of look-ahead.

    bracket = (2 pi / c) * sum_{k > N} |c_k|^2
            = 1/2 - c/(4 pi) - (1 / (pi c)) sum_{k=1}^{N} (1 - cos(k c)) / k^2.

    The partial sum is finite, taken with the half-angle form of 1 - cos and
    exact (fsum) accumulation, so adjacent N give consistently rounded
    values and the empty sum at N = 0 is literally zero.
    """
    c = band.bandwidth
    partial = 0.0
    if N > 0:
        parts = []
        for start in range(1, N + 1, _SUM_CHUNK):
            k = np.arange(start, min(start + _SUM_CHUNK, N + 1), dtype=np.float64)
            s = np.sin(0.5 * c * k)
            parts.append(math.fsum(2.0 * s * s / (k * k)))
        partial = math.fsum(parts)
    return 0.5 - c / (4.0 * math.pi) - partial / (math.pi * c)


def _report_from_bracket(
    band: BandpassInterval,
    bracket: float,
    subspace: str,
    delay_taps: int | None,
) -> ApproximationReport:
    """Turn the tail fraction into a report, policing the radicand.

    bracket is sin^2 of the angle.  Values in (-1e-12, 0) are rounding noise
    from the closed-form cancellation and clamp to zero; anything at or
    below -1e-12 is mathematically impossible and raises NegativeRadicand.
    """
    if bracket < 0.0:
        if bracket <= -1e-12:
            raise NegativeRadicand(
                f"squared angle ratio {bracket!r} is negative beyond rounding"
            )
        bracket = 0.0
    c = band.bandwidth
    norm = math.sqrt(c / TWO_PI)
    ratio = math.sqrt(min(1.0, bracket))
    return ApproximationReport(
        kernel_norm=norm,
        distance=norm * ratio,
        angle=math.asin(ratio),
        subspace=subspace,
        method="ClosedForm",
        error_estimate=0.0,
        delay=delay_taps,
    )


def causal_report_digital(band: BandpassInterval) -> ApproximationReport:
    """Distance and angle from the band kernel to the causal digital filters.

    Closed form: kernel_norm = sqrt(c / (2 pi)) and
    angle = arcsin(sqrt(1/2 - c / (4 pi))).  The half-circle band c = pi
    gives angle pi/6 and distance 1 / (2 sqrt(2)) exactly.
    """
    _require_digital(band)
    return _report_from_bracket(band, _bracket(band, 0), "Causal", None)


def delayed_report_digital(
    band: BandpassInterval, delay: DigitalDelay
) -> ApproximationReport:
    """Distance and angle to the digital filters with N taps of look-ahead.

    N = 0 is the causal subspace and returns the causal report unchanged.
    """
    _require_digital(band)
    if delay.N == 0:
        return causal_report_digital(band)
    return _report_from_bracket(band, _bracket(band, delay.N), "Delayed", delay.N)


def best_causal_coefficients(
    band: BandpassInterval, delay: DigitalDelay, window: int
) -> DigitalSequence:
    """Impulse response of the best approximation with N taps of look-ahead.

    The optimal filter keeps h[n] = c_{-n} for n >= -N and drops the rest;
    the returned sequence covers n in [-N, window] and window must be >= N
    so it is never empty on the causal side.
    """
    _require_digital(band)
    N = delay.N
    if window < N:
        raise ValueError("window must be at least the look-ahead")
    table = FourierCoefficientTable.build(band, -window, N)
    return DigitalSequence(-N, table.values[::-1].copy())


def c0_ratio_angle(ratio: float) -> float:
    """Angle of a one-sided exponential-type filter from its c_0 energy share.

    For kernels whose only anticausal energy sits in a mean component of
    relative size ratio = |c_0| / norm, the causal angle is
    arcsin(sqrt((1 - ratio^2) / 2)).  ratio must lie in [0, 1].
    """
    if not 0.0 <= ratio <= 1.0:
        raise DomainError(f"energy ratio {ratio!r} outside [0, 1]")
    return math.asin(math.sqrt(0.5 * (1.0 - ratio * ratio)))
