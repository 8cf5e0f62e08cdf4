#!/usr/bin/env python3
"""Compare the numba and numpy kernel backends on identical workloads.

Usage: python3 benchmarks/benchmark_backends.py [--repeat N]

Each workload is run under both backends; results must agree exactly, and the
wall-clock times are reported side by side.  The numba path includes a warmup
call so JIT compilation is not measured.
"""

from __future__ import annotations

import argparse
import time

from harmonium import kernels
from harmonium.graphs import family, laplacian


def workloads():
    yield (
        "count path5  m=30",
        lambda: kernels.count_nowhere_harmonic_kernel(
            laplacian(family("path", 5)), 30
        ),
    )
    yield (
        "count K4     m=120",
        lambda: kernels.count_nowhere_harmonic_kernel(
            laplacian(family("complete", 4)), 120
        ),
    )
    yield (
        "recip cycle4 m=80",
        lambda: kernels.reciprocity_sum_kernel(
            laplacian(family("cycle", 4)), 80
        ),
    )
    yield (
        "proper K4    m=40",
        lambda: kernels.count_proper_kernel(
            family("complete", 4).edges, 4, 40
        ),
    )
    import numpy as np

    A = np.diag(np.array([1, -1, 1, -1], dtype=np.int64)) @ laplacian(
        family("cycle", 4)
    )
    yield (
        "region cycle4 t=40",
        lambda: kernels.count_region_points_kernel(A, 40),
    )
    yield ("star  n=6   m=400", lambda: kernels.star_count_kernel(6, 400))


def bench(fn, repeat: int) -> tuple[float, int]:
    best = float("inf")
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'workload':24s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, fn in workloads():
        times = {}
        values = {}
        for backend in ("numba", "numpy"):
            kernels.set_backend(backend)
            fn()  # warmup (JIT compile / allocation)
            times[backend], values[backend] = bench(fn, args.repeat)
        assert values["numba"] == values["numpy"], name
        ratio = times["numpy"] / times["numba"] if times["numba"] > 0 else 0.0
        print(
            f"{name:24s} {times['numba']:9.4f}s {times['numpy']:9.4f}s "
            f"{ratio:7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
