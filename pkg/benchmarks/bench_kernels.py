#!/usr/bin/env python3
"""Benchmark the scan-kernel backends against each other.

Times the multiplicity-table scan (all 2**k sign patterns) for the
compiled kernel, the numpy fallback, and the per-vector reference, and
prints a table with speedups.  Run:

    python benchmarks/bench_kernels.py [--kmax 24] [--repeats 3]
"""

from __future__ import annotations

import argparse
import time

from flateta.combinatorics import KERNEL_BACKEND, residue_histogram
from flateta.core import make_manifold

PY_REFERENCE_CAP = 18  # the per-vector loop gets painful beyond this


def time_backend(backend: str, k: int, n: int, offset: int, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        residue_histogram(k, n, offset, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=24)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    backends = ["numpy", "python"]
    if KERNEL_BACKEND == "native":
        backends.insert(0, "native")
    else:
        print("note: compiled kernel unavailable in this build; timing fallbacks only")

    header = f"{'k':>3} {'patterns':>12}" + "".join(f" {b:>12}" for b in backends)
    if "native" in backends:
        header += f" {'numpy/native':>13}"
    print(header)

    for k in range(10, args.kmax + 1, 2):
        m = make_manifold(k)
        offset = (m.delta * m.n - k * (k + 1) // 2) // 2
        row = f"{k:>3} {1 << k:>12}"
        timings = {}
        for backend in backends:
            if backend == "python" and k > PY_REFERENCE_CAP:
                row += f" {'-':>12}"
                continue
            timings[backend] = time_backend(backend, k, m.n, offset, args.repeats)
            row += f" {timings[backend] * 1e3:>9.2f} ms"
        if "native" in timings and "numpy" in timings:
            row += f" {timings['numpy'] / timings['native']:>12.1f}x"
        print(row)

    # all backends must agree on what they count
    for k in (10, 14):
        m = make_manifold(k)
        offset = (m.delta * m.n - k * (k + 1) // 2) // 2
        results = {b: residue_histogram(k, m.n, offset, backend=b) for b in backends}
        assert len({tuple(v) for v in results.values()}) == 1, f"backend mismatch at k={k}"
    print("backend agreement check: ok")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
