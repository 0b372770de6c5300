#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot kernels at several sizes, plus a full population fit
(coarse grid + golden-section refinement) through each backend.

    python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

import numpy as np

from bibliofit import _purekernels
from bibliofit import backend, fitting

try:
    from bibliofit import _fastkernels
except ImportError:
    _fastkernels = None


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_kernels(repeats):
    rng = np.random.default_rng(0)
    rows = []
    for n in (300, 10_000, 100_000):
        p = rng.uniform(1, 2000, n)
        c = rng.uniform(1, 80000, n)
        h = rng.uniform(1, 120, n)
        cits = np.ascontiguousarray(np.sort(rng.integers(0, 500, n))[::-1].astype(np.int64))
        inv = np.ascontiguousarray(1.0 / rng.integers(1, 9, n).astype(np.float64))
        desc = np.ascontiguousarray(np.sort(rng.uniform(0, 500, n))[::-1])
        cases = [
            (f"model_chi2 er    n={n:>6}", lambda k: k.model_chi2(p, c, h, 1, 2.2)),
            (f"model_chi2 gs    n={n:>6}", lambda k: k.model_chi2(p, c, h, 2, 0.84)),
            (f"h_index_core     n={n:>6}", lambda k: k.h_index_core(cits)),
            (f"hm_core          n={n:>6}", lambda k: k.hm_core(desc, inv)),
        ]
        for label, call in cases:
            pure = best_of(lambda: call(_purekernels), repeats)
            if _fastkernels is not None:
                fast = best_of(lambda: call(_fastkernels), repeats)
                rows.append((label, pure, fast))
            else:
                rows.append((label, pure, None))
    return rows


def bench_fit(repeats):
    rng = np.random.default_rng(1)
    P = rng.integers(100, 1001, 300).astype(float)
    pts = np.column_stack([
        P, 40.0 * P,
        np.maximum(3.1 * P ** (1 / 2.2) + rng.normal(0, 6.0, 300), 0.5)])
    rows = []
    original = backend.model_chi2
    try:
        backend.model_chi2 = _purekernels.model_chi2
        pure = best_of(lambda: fitting.fit(pts, "er"), repeats)
        fast = None
        if _fastkernels is not None:
            backend.model_chi2 = _fastkernels.model_chi2
            fast = best_of(lambda: fitting.fit(pts, "er"), repeats)
    finally:
        backend.model_chi2 = original
    rows.append(("fit er (grid+golden) n=300", pure, fast))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if _fastkernels is None:
        print("compiled extension not available; timing pure-Python only\n")

    print(f"{'case':<32} {'python':>12} {'cython':>12} {'speedup':>9}")
    print("-" * 68)
    for label, pure, fast in bench_kernels(args.repeats) + bench_fit(args.repeats):
        if fast is None:
            print(f"{label:<32} {pure * 1e3:>10.3f}ms {'-':>12} {'-':>9}")
        else:
            print(f"{label:<32} {pure * 1e3:>10.3f}ms {fast * 1e3:>10.3f}ms "
                  f"{pure / fast:>8.1f}x")


if __name__ == "__main__":
    main()
