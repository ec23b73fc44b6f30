"""Timing comparison between the compiled kernels and the NumPy fallback.

Run:  python benchmarks/bench_kernels.py [--repeats 200]

Reports per-call time for the two-input amplitude builder, the single
input binomial amplitudes, and the path-term grid, at several problem
sizes, plus the worst cross-backend deviation observed while timing.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import focksplit._kernels_py as kpy
from focksplit import SymmetricSplitter, kernel_backend
from focksplit.numerics import LOG_FACTORIAL_TABLE, LogMagnitudePhase

try:
    import focksplit._kernels as kc
except ImportError:
    kc = None


def _polar(s: SymmetricSplitter):
    lr = LogMagnitudePhase.from_complex(s.rho)
    lt = LogMagnitudePhase.from_complex(s.tau)
    return lr.log_mag, lr.phase, lt.log_mag, lt.phase


def time_call(fn, args, repeats: int) -> float:
    fn(*args)  # warm up
    start = time.perf_counter()
    for _ in range(repeats):
        fn(*args)
    return (time.perf_counter() - start) / repeats


def fmt_seconds(t: float) -> str:
    if t < 1e-6:
        return f"{t * 1e9:8.1f} ns"
    if t < 1e-3:
        return f"{t * 1e6:8.1f} us"
    return f"{t * 1e3:8.1f} ms"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--repeats", type=int, default=200, help="calls per measurement (default 200)"
    )
    args = parser.parse_args()

    print(f"active backend: {kernel_backend()}")
    if kc is None:
        print("compiled extension not built; timing the fallback only")
    backends = [("python", kpy)] + ([("compiled", kc)] if kc is not None else [])

    s = SymmetricSplitter.from_polar(0.6, 0.35)
    rho, tau = complex(s.rho), complex(s.tau)
    polar = _polar(s)

    print("\ntwo_input_amplitudes (photon-insertion builder)")
    for n1, n2 in ((5, 5), (15, 15), (30, 30), (64, 64), (128, 128), (256, 256)):
        row = [f"  ({n1:3d},{n2:3d})"]
        results = []
        for name, mod in backends:
            reps = max(1, min(args.repeats, int(2e5 / (n1 + n2 + 1))))
            t = time_call(
                mod.two_input_amplitudes, (n1, n2, rho, tau, False), reps
            )
            row.append(f"{name} {fmt_seconds(t)}")
            results.append(np.asarray(mod.two_input_amplitudes(n1, n2, rho, tau, False)))
        if len(results) == 2:
            dev = float(np.max(np.abs(results[0] - results[1])))
            row.append(f"max diff {dev:.1e}")
        print("  ".join(row))

    print("\nsingle_input_amplitudes (log-space binomial)")
    for n in (10, 100, 500):
        row = [f"  n={n:4d}    "]
        for name, mod in backends:
            t = time_call(
                mod.single_input_amplitudes, (n, LOG_FACTORIAL_TABLE, *polar),
                args.repeats,
            )
            row.append(f"{name} {fmt_seconds(t)}")
        print("  ".join(row))

    print("\ntwo_input_term_grid (path-term view)")
    for n1, n2 in ((10, 10), (20, 20), (40, 40)):
        row = [f"  ({n1:3d},{n2:3d})"]
        for name, mod in backends:
            t = time_call(
                mod.two_input_term_grid,
                (n1, n2, LOG_FACTORIAL_TABLE, *polar, False),
                args.repeats,
            )
            row.append(f"{name} {fmt_seconds(t)}")
        print("  ".join(row))

    # A quick accuracy statement alongside the timings: the builder keeps
    # the norm at machine precision even at the largest size above.
    amps = np.asarray(kpy.two_input_amplitudes(256, 256, rho, tau, False))
    norm_residual = abs(float(np.sum(np.abs(amps) ** 2)) - 1.0)
    print(f"\nfallback norm residual at (256, 256): {norm_residual:.3e}")
    if kc is not None:
        amps = np.asarray(kc.two_input_amplitudes(256, 256, rho, tau, False))
        norm_residual = abs(float(np.sum(np.abs(amps) ** 2)) - 1.0)
        print(f"compiled norm residual at (256, 256): {norm_residual:.3e}")


if __name__ == "__main__":
    main()
