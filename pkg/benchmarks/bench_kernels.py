"""Time the compiled Bessel kernel against the pure-Python fallback.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py

Reports best-of-seven per-call times for each evaluation regime plus a
mixed grid shaped like a CLI scan, and cross-checks that both backends
agree bitwise-closely over the full range.
"""

import time

import numpy as np

from qlorentz._kernels import _pure

try:
    from qlorentz._kernels import _core
except ImportError:
    _core = None

WORKLOADS = (
    ("series (z=0.8)", [0.8] * 1000),
    ("bridge (z=7.0)", [7.0] * 1000),
    ("tail (z=30.0)", [30.0] * 1000),
    ("mixed scan grid", [float(z) for z in np.linspace(0.05, 40.0, 1000)]),
)


def per_call_ns(fn, zs, repeats=7):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for z in zs:
            fn(z)
        best = min(best, time.perf_counter() - start)
    return best / len(zs) * 1e9


def main():
    header = f"{'workload':<18} {'pure ns/call':>13} {'compiled ns/call':>17} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, zs in WORKLOADS:
        pure = per_call_ns(_pure.k0, zs)
        if _core is None:
            print(f"{label:<18} {pure:>13.0f} {'(not built)':>17}")
            continue
        comp = per_call_ns(_core.k0, zs)
        print(f"{label:<18} {pure:>13.0f} {comp:>17.0f} {pure / comp:>7.1f}x")

    if _core is None:
        print("\ncompiled backend not built; rerun after `pip install -e . --no-build-isolation`")
        return

    gaps = []
    for z in np.linspace(0.05, 40.0, 500):
        a, b = _pure.k0(float(z)), _core.k0(float(z))
        gaps.append(abs(a - b) / abs(a))
    print(f"\nbackend agreement: worst relative gap {max(gaps):.3e} over 500 points")


if __name__ == "__main__":
    main()
