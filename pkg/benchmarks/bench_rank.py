#!/usr/bin/env python3
"""Benchmark the compiled GF(p) rank kernel against the numpy fallback.

Two workloads:
  * synthetic dense matrices over GF(32003) at several sizes;
  * a real pipeline slice: local-cohomology tables (ext backend) and Betti
    tables over a sampled ideal family, with the kernel selection forced.

Usage: python benchmarks/bench_rank.py [--samples N]
"""

import argparse
import time

import numpy as np

import lexcohom.linalg as linalg
from lexcohom.betti import betti_table
from lexcohom.localcohom import cohomology_table
from lexcohom.verify import FamilySpec, enumerate_family

P = 32003


def bench_synthetic(force, sizes=((30, 30), (80, 80), (150, 150), (250, 200)),
                    reps=20):
    rows = []
    rng = np.random.default_rng(0)
    for m, n in sizes:
        mats = [rng.integers(0, P, size=(m, n)).astype(np.int64)
                for _ in range(reps)]
        t0 = time.perf_counter()
        for a in mats:
            linalg.rank_mod_p(a, P, force=force)
        rows.append(((m, n), (time.perf_counter() - t0) / reps))
    return rows


def bench_pipeline(force, samples):
    original = linalg.HAVE_COMPILED
    linalg.HAVE_COMPILED = force == "compiled"
    try:
        spec = FamilySpec(n=4, max_deg=4, count=samples, seed=5, max_extra_gens=8)
        t0 = time.perf_counter()
        for I in enumerate_family(spec):
            cohomology_table(I, backend="ext")
            betti_table(I)
        return time.perf_counter() - t0
    finally:
        linalg.HAVE_COMPILED = original


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=50)
    args = ap.parse_args()

    if not linalg.HAVE_COMPILED:
        print("compiled kernel not built (python setup.py build_ext --inplace); "
              "benchmarking the fallback only")

    print(f"{'synthetic rank':<24}{'python':>12}{'compiled':>12}{'speedup':>10}")
    py = dict(bench_synthetic("python"))
    if linalg.HAVE_COMPILED:
        co = dict(bench_synthetic("compiled"))
    for size in py:
        a = py[size]
        line = f"{str(size):<24}{a * 1e3:>10.2f}ms"
        if linalg.HAVE_COMPILED:
            b = co[size]
            line += f"{b * 1e3:>10.2f}ms{a / b:>9.1f}x"
        print(line)

    print(f"\npipeline: ext-backend cohomology + Betti tables over "
          f"{args.samples} sampled ideals (n=4, D=4)")
    t_py = bench_pipeline("python", args.samples)
    print(f"{'python fallback':<24}{t_py:>10.2f}s")
    if linalg.HAVE_COMPILED:
        t_co = bench_pipeline("compiled", args.samples)
        print(f"{'compiled kernel':<24}{t_co:>10.2f}s{t_py / t_co:>9.1f}x")


if __name__ == "__main__":
    main()
