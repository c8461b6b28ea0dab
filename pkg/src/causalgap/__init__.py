"""causalgap: how far ideal bandpass filters sit from physically realizable ones.

An ideal (brick-wall) filter multiplies by the indicator of a frequency
band; its impulse response spreads over all time, so no causal system, and
no system with a finite look-ahead, can implement it exactly.  This package
computes the exact L2 distance and angle from an ideal filter to the causal
filters and to the filters allowed a delay, in both the analog (real line)
and digital (unit circle) settings, and ships the brute-force oracles used
to validate every closed form.
"""

from .errors import (
    BudgetExceeded,
    DomainError,
    GridMismatch,
    NegativeRadicand,
    NonMonotoneLadder,
    NonRealInput,
    ZeroKernel,
)
from .kernel import (
    BandpassInterval,
    QuadratureConfig,
    QuadratureResult,
    SeriesConfig,
    TailSumResult,
    coefficient_tail_sum,
    integrate_adaptive,
    oscillatory_kernel,
    sine_integral,
)
from .signals import AnalogDelay, DigitalDelay, DigitalSequence, SampledSignal
from .analog import (
    AnalogImpulseResponse,
    ApproximationReport,
    PaleyWienerDiagnostic,
    TransferFunctionSamples,
    causal_report,
    delayed_distance_si,
    delayed_report,
    impulse_response,
    memoryless_angle_check,
    paley_wiener_diagnostic,
    real_transfer_report,
    truncation_energy_quadrature,
    truncation_energy_si,
)
from .digital import (
    FourierCoefficientTable,
    best_causal_coefficients,
    c0_ratio_angle,
    causal_report_digital,
    delayed_report_digital,
    fourier_coefficient,
)
from .operators import (
    NormEstimate,
    convolve_analog,
    convolve_digital,
    matched_input,
    operator_norm_estimate,
    truncate_to_delay,
    truncate_to_delay_analog,
)
from .oracle import (
    LimitProbeResult,
    OracleDistance,
    analog_distance_oracle,
    digital_distance_oracle,
    limit_probe,
)

__version__ = "0.1.0"

__all__ = [
    "AnalogDelay",
    "AnalogImpulseResponse",
    "ApproximationReport",
    "BandpassInterval",
    "BudgetExceeded",
    "DigitalDelay",
    "DigitalSequence",
    "DomainError",
    "FourierCoefficientTable",
    "GridMismatch",
    "LimitProbeResult",
    "NegativeRadicand",
    "NonMonotoneLadder",
    "NonRealInput",
    "NormEstimate",
    "OracleDistance",
    "PaleyWienerDiagnostic",
    "QuadratureConfig",
    "QuadratureResult",
    "SampledSignal",
    "SeriesConfig",
    "TailSumResult",
    "TransferFunctionSamples",
    "ZeroKernel",
    "analog_distance_oracle",
    "best_causal_coefficients",
    "c0_ratio_angle",
    "causal_report",
    "causal_report_digital",
    "coefficient_tail_sum",
    "convolve_analog",
    "convolve_digital",
    "delayed_distance_si",
    "delayed_report",
    "delayed_report_digital",
    "digital_distance_oracle",
    "fourier_coefficient",
    "impulse_response",
    "integrate_adaptive",
    "limit_probe",
    "matched_input",
    "memoryless_angle_check",
    "operator_norm_estimate",
    "oscillatory_kernel",
    "paley_wiener_diagnostic",
    "real_transfer_report",
    "sine_integral",
    "truncate_to_delay",
    "truncate_to_delay_analog",
    "truncation_energy_quadrature",
    "truncation_energy_si",
    "__version__",
]
