#!/usr/bin/env python3
"""Benchmark the compiled mode-equation kernel against the pure-Python twin.

Runs the full oracle path (integration plus plane-wave matching) through each
backend on a few representative parameter points and reports best-of-N wall
times.  Usage:

    python benchmarks/bench_kernel.py [repeats]
"""

import sys
import time

import cosmo_qfi._kernel as kernel
from cosmo_qfi import IntegrationConfig, ModelParams, integrate_mode
from cosmo_qfi._kernel import pure

try:
    from cosmo_qfi._kernel import _mode_rk as compiled
except ImportError:
    compiled = None

POINTS = [
    ("moderate frequency", ModelParams(1.0, 1.0, 1.0)),
    ("slow mode", ModelParams(2.0, 0.1, 0.3)),
    ("stiff oscillation", ModelParams(0.5, 5.0, 2.0)),
]


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    cfg = IntegrationConfig()
    backends = [("pure", pure)] + ([("compiled", compiled)] if compiled else [])
    print(f"{'point':<20} " + " ".join(f"{name:>12}" for name, _ in backends) + "  speedup")
    for label, params in POINTS:
        times = {}
        for name, impl in backends:
            kernel.impl = impl
            times[name] = best_of(lambda: integrate_mode(params, cfg), repeats)
        row = f"{label:<20} " + " ".join(f"{times[name]*1e3:>10.2f}ms" for name, _ in backends)
        if compiled:
            row += f"  {times['pure'] / times['compiled']:>6.1f}x"
        print(row)
    if not compiled:
        print("compiled kernel not built; showing pure backend only")


if __name__ == "__main__":
    main()
