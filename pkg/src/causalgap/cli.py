"""Command-line surface: reports, sweeps, impulse tables, and self-checks.

Exit codes: 0 success, 1 failed verification check, 2 invalid band or
parameters, 3 quadrature hit its subdivision budget (the report is still
printed, with converged=false), 4 unwritable output path.

All numeric output uses 17 significant digits so every value parses back
to the exact in-memory double.  Output is deterministic for a given
argument list and seed; the CAUSALGAP_SEED environment variable supplies
the default seed for `verify`.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import analog, digital, verify
from .errors import DomainError
from .kernel import TWO_PI, BandpassInterval, QuadratureConfig
from .operators import truncate_to_delay, truncate_to_delay_analog
from .signals import AnalogDelay, DigitalDelay, DigitalSequence

__all__ = ["main"]

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\t": "\\t", "\r": "\\r"}


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _scalar(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, float):
        return _num(x)
    if isinstance(x, str):
        return '"' + "".join(_ESCAPES.get(ch, ch) for ch in x) + '"'
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _json_dumps(obj, level: int = 0) -> str:
    """Minimal JSON writer with .17g floats (so round-trips are idempotent)."""
    pad = "  " * level
    inner = "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = [f'{inner}"{k}": {_json_dumps(v, level + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        rows = [inner + _json_dumps(v, level + 1) for v in obj]
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    return _scalar(obj)


def _fail(message: str, code: int) -> int:
    print(f"causalgap: error: {message}", file=sys.stderr)
    return code


def _emit(text: str, path: str | None) -> int:
    if path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        return _fail(f"cannot write {path!r}: {exc}", 4)
    return 0


def _report_dict(mode: str, band: BandpassInterval, rep) -> dict:
    return {
        "schema": 1,
        "mode": mode,
        "band": {"a": band.a, "b": band.b},
        "subspace": rep.subspace,
        "delay": rep.delay,
        "kernel_norm": rep.kernel_norm,
        "distance": rep.distance,
        "angle": rep.angle,
        "angle_degrees": rep.angle_degrees,
        "method": rep.method,
        "error_estimate": rep.error_estimate,
        "converged": rep.converged,
    }


def _print_report(mode: str, band: BandpassInterval, rep, fmt: str) -> None:
    data = _report_dict(mode, band, rep)
    if fmt == "json":
        print(_json_dumps(data))
        return
    flat = dict(data)
    flat["band"] = f"[{_num(band.a)}, {_num(band.b)}]"
    for key, value in flat.items():
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, float):
            text = _num(value)
        elif value is None:
            text = "none"
        else:
            text = str(value)
        print(f"{key:15} {text}")


def _quad_cfg(args) -> QuadratureConfig | None:
    if args.quad_tol is None and args.max_subdivisions is None:
        return None
    kwargs = {}
    if args.quad_tol is not None:
        kwargs["abs_tolerance"] = args.quad_tol
        kwargs["rel_tolerance"] = args.quad_tol
    if args.max_subdivisions is not None:
        kwargs["max_subdivisions"] = args.max_subdivisions
    return QuadratureConfig(**kwargs)


def _analog_band(a: float | None, b: float | None) -> BandpassInterval | None:
    if a is None or b is None:
        return None
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        return None
    return BandpassInterval.analog(a, b)


def _digital_band(a: float | None, b: float | None) -> BandpassInterval | None:
    if a is None or b is None:
        return None
    if not (0.0 < a < b < TWO_PI):
        return None
    return BandpassInterval.digital(a, b)


def cmd_analog(args) -> int:
    band = _analog_band(args.a, args.b)
    if band is None:
        return _fail(f"invalid analog band [{args.a!r}, {args.b!r}]: need a < b", 2)
    try:
        cfg = _quad_cfg(args)
    except ValueError as exc:
        return _fail(str(exc), 2)
    if args.delay is None:
        rep = analog.causal_report(band)
    else:
        if not (math.isfinite(args.delay) and args.delay >= 0.0):
            return _fail("delay must be a nonnegative real", 2)
        rep = analog.delayed_report(band, AnalogDelay(args.delay), cfg)
    _print_report("analog", band, rep, args.format)
    return 0 if rep.converged else 3


def cmd_digital(args) -> int:
    band = _digital_band(args.a, args.b)
    if band is None:
        return _fail(
            f"invalid digital band [{args.a!r}, {args.b!r}]: need 0 < a < b < 2*pi", 2
        )
    if args.coeffs is not None:
        if args.coeffs < 0:
            return _fail("coefficient window must be nonnegative", 2)
        table = digital.FourierCoefficientTable.build(band, -args.coeffs, args.coeffs)
        lines = ["k,re,im"]
        for k, value in zip(table.indices(), table.values):
            lines.append(f"{int(k)},{_num(value.real)},{_num(value.imag)}")
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    if args.delay_samples is None:
        rep = digital.causal_report_digital(band)
    else:
        if args.delay_samples < 0:
            return _fail("delay-samples must be a nonnegative integer", 2)
        rep = digital.delayed_report_digital(band, DigitalDelay(args.delay_samples))
    _print_report("digital", band, rep, args.format)
    return 0


def _sweep_rows(args, params) -> list | int:
    rows = []
    for p in params:
        p = float(p)
        if args.mode == "analog":
            if args.vary == "bandwidth":
                if p <= 0.0:
                    return _fail("bandwidth values must be positive", 2)
                band = BandpassInterval.analog(0.0, p)
                if args.delay is None:
                    rep = analog.causal_report(band)
                else:
                    rep = analog.delayed_report(band, AnalogDelay(args.delay))
            else:
                band = _analog_band(args.a, args.b)
                if band is None:
                    return _fail("delay sweep needs a valid --a/--b analog band", 2)
                if p < 0.0:
                    return _fail("delay values must be nonnegative", 2)
                rep = analog.delayed_report(band, AnalogDelay(p))
        else:
            if args.vary == "bandwidth":
                if not 0.0 < p < TWO_PI:
                    return _fail("digital bandwidth values must lie in (0, 2*pi)", 2)
                band = BandpassInterval.digital(math.pi - 0.5 * p, math.pi + 0.5 * p)
                if args.delay_samples is None:
                    rep = digital.causal_report_digital(band)
                else:
                    rep = digital.delayed_report_digital(
                        band, DigitalDelay(args.delay_samples)
                    )
            else:
                band = _digital_band(args.a, args.b)
                if band is None:
                    return _fail("delay sweep needs a valid --a/--b digital band", 2)
                if abs(p - round(p)) > 1e-9 or p < 0.0:
                    return _fail(
                        "digital delay sweep values must be nonnegative integers", 2
                    )
                rep = digital.delayed_report_digital(band, DigitalDelay(int(round(p))))
        rows.append((p, rep))
    return rows


def cmd_sweep(args) -> int:
    lo, hi = args.range
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        return _fail("range must satisfy LO < HI", 2)
    if args.steps < 2:
        return _fail("need at least two steps", 2)
    if args.delay is not None and args.delay < 0.0:
        return _fail("delay must be nonnegative", 2)
    if args.delay_samples is not None and args.delay_samples < 0:
        return _fail("delay-samples must be nonnegative", 2)
    rows = _sweep_rows(args, np.linspace(lo, hi, args.steps))
    if isinstance(rows, int):
        return rows
    lines = ["param,distance,angle,kernel_norm,method,error_estimate"]
    for p, rep in rows:
        lines.append(
            f"{_num(p)},{_num(rep.distance)},{_num(rep.angle)},"
            f"{_num(rep.kernel_norm)},{rep.method},{_num(rep.error_estimate)}"
        )
    return _emit("\n".join(lines) + "\n", args.out)


def cmd_impulse(args) -> int:
    if args.mode == "analog":
        band = _analog_band(args.a, args.b)
        if band is None:
            return _fail("invalid analog band: need a < b", 2)
        if args.t_max is None or args.dt is None:
            return _fail("analog impulse needs --t-max and --dt", 2)
        if not (args.t_max > 0.0 and args.dt > 0.0):
            return _fail("need --t-max > 0 and --dt > 0", 2)
        n = int(round(2.0 * args.t_max / args.dt)) + 1
        sig = analog.AnalogImpulseResponse(band).sample(-args.t_max, args.dt, n)
        if args.delay is not None:
            if args.delay < 0.0:
                return _fail("delay must be nonnegative", 2)
            sig = truncate_to_delay_analog(sig, AnalogDelay(args.delay))
        axis = sig.times()
        values = sig.values
    else:
        band = _digital_band(args.a, args.b)
        if band is None:
            return _fail("invalid digital band: need 0 < a < b < 2*pi", 2)
        if args.window is None or args.window < 1:
            return _fail("digital impulse needs --window >= 1", 2)
        K = args.window
        table = digital.FourierCoefficientTable.build(band, -K, K)
        seq = DigitalSequence(-K, table.values[::-1].copy())
        if args.delay_samples is not None:
            if args.delay_samples < 0:
                return _fail("delay-samples must be nonnegative", 2)
            seq = truncate_to_delay(seq, DigitalDelay(args.delay_samples))
        axis = seq.indices()
        values = seq.values
    lines = ["index_or_time,re,im"]
    if args.mode == "analog":
        for x, v in zip(axis, values):
            lines.append(f"{_num(x)},{_num(v.real)},{_num(v.imag)}")
    else:
        for x, v in zip(axis, values):
            lines.append(f"{int(x)},{_num(v.real)},{_num(v.imag)}")
    return _emit("\n".join(lines) + "\n", args.out)


def cmd_verify(args) -> int:
    seed = args.seed
    if seed is None:
        try:
            seed = int(os.environ.get("CAUSALGAP_SEED", "0"))
        except ValueError:
            return _fail("CAUSALGAP_SEED must be an integer", 2)
    try:
        results = verify.run_checks(args.suite, seed)
    except DomainError as exc:
        return _fail(str(exc), 2)
    failed = 0
    for res in results:
        mark = "PASS" if res.passed else "FAIL"
        failed += 0 if res.passed else 1
        print(f"{mark} {res.suite}.{res.name}: {res.detail}")
    total = len(results)
    print(f"{total - failed}/{total} checks passed (suite {args.suite}, seed {seed})")
    return 0 if failed == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causalgap",
        description=(
            "Distances and angles between ideal bandpass filters and the "
            "causal or delay-limited filters that can be physically realized."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analog", help="report for an analog band")
    pa.add_argument("--a", type=float, required=True, help="lower band edge")
    pa.add_argument("--b", type=float, required=True, help="upper band edge")
    pa.add_argument("--delay", type=float, default=None, help="look-ahead T (causal if omitted)")
    pa.add_argument("--quad-tol", type=float, default=None, help="quadrature tolerance override")
    pa.add_argument("--max-subdivisions", type=int, default=None, help="quadrature budget override")
    pa.add_argument("--format", choices=("json", "text"), default="json")
    pa.set_defaults(func=cmd_analog)

    pd = sub.add_parser("digital", help="report for a digital band in (0, 2*pi)")
    pd.add_argument("--a", type=float, required=True)
    pd.add_argument("--b", type=float, required=True)
    pd.add_argument("--delay-samples", type=int, default=None, help="look-ahead N (causal if omitted)")
    pd.add_argument("--coeffs", type=int, default=None, metavar="K", help="emit c_-K..c_K as CSV instead of a report")
    pd.add_argument("--format", choices=("json", "text"), default="json")
    pd.set_defaults(func=cmd_digital)

    ps = sub.add_parser("sweep", help="CSV of reports along a parameter range")
    ps.add_argument("--mode", choices=("analog", "digital"), required=True)
    ps.add_argument("--vary", choices=("bandwidth", "delay"), required=True)
    ps.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"), required=True)
    ps.add_argument("--steps", type=int, required=True)
    ps.add_argument("--a", type=float, default=None, help="fixed band edge for delay sweeps")
    ps.add_argument("--b", type=float, default=None)
    ps.add_argument("--delay", type=float, default=None, help="fixed analog look-ahead for bandwidth sweeps")
    ps.add_argument("--delay-samples", type=int, default=None, help="fixed digital look-ahead for bandwidth sweeps")
    ps.add_argument("--out", default=None, help="output path (stdout if omitted)")
    ps.set_defaults(func=cmd_sweep)

    pi = sub.add_parser("impulse", help="CSV of ideal impulse-response samples")
    pi.add_argument("--mode", choices=("analog", "digital"), required=True)
    pi.add_argument("--a", type=float, required=True)
    pi.add_argument("--b", type=float, required=True)
    pi.add_argument("--t-max", type=float, default=None, help="analog grid half-width")
    pi.add_argument("--dt", type=float, default=None, help="analog grid step")
    pi.add_argument("--window", type=int, default=None, help="digital index window half-width")
    pi.add_argument("--delay", type=float, default=None, help="truncate below -T")
    pi.add_argument("--delay-samples", type=int, default=None, help="truncate below -N")
    pi.add_argument("--out", default=None)
    pi.set_defaults(func=cmd_impulse)

    pv = sub.add_parser("verify", help="run self-check suites")
    pv.add_argument("--suite", choices=("all", "analog", "digital", "operators"), default="all")
    pv.add_argument("--seed", type=int, default=None, help="defaults to CAUSALGAP_SEED or 0")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
