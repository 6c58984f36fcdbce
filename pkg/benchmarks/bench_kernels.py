"""Benchmark the classical-map kernels: active backend vs pure numpy.

Run from the repo root:

    python3 benchmarks/bench_kernels.py
    KIS_NUMBA=0 python3 benchmarks/bench_kernels.py   # numpy-only baseline

With numba available the script reports both paths side by side plus the
speedup; with KIS_NUMBA=0 the dispatched path IS the numpy path and the
two columns coincide.
"""

import argparse
import math
import time

import numpy as np

from kis import _kernels


def best_of(fn, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_ensemble(n: int, kicks: int, repeats: int):
    rng = np.random.default_rng(0)
    base = rng.normal(0.0, 0.5, size=(2, n))
    theta, mu, g = 2.0 * math.pi, 0.01 * math.pi, 1.5

    def run(kernel):
        x1 = base[0].copy()
        x2 = base[1].copy()
        for _ in range(kicks):
            kernel(x1, x2, theta, mu, g)
        return x1, x2

    run(_kernels.ensemble_kick)  # JIT warmup
    t_active = best_of(lambda: run(_kernels.ensemble_kick), repeats)
    t_numpy = best_of(lambda: run(_kernels.ensemble_kick_numpy), repeats)
    return t_active, t_numpy


def bench_poincare(seeds: int, kicks: int, repeats: int):
    rng = np.random.default_rng(1)
    x1_0 = rng.uniform(-3, 3, size=seeds)
    x2_0 = rng.uniform(-3, 3, size=seeds)
    theta, mu, g = 2.0 * math.pi, 0.01 * math.pi, 1.5

    _kernels.poincare_orbits(x1_0, x2_0, theta, mu, g, kicks, 1e4)
    t_active = best_of(
        lambda: _kernels.poincare_orbits(x1_0, x2_0, theta, mu, g, kicks, 1e4),
        repeats)
    t_numpy = best_of(
        lambda: _kernels.poincare_orbits_numpy(x1_0, x2_0, theta, mu, g, kicks, 1e4),
        repeats)
    return t_active, t_numpy


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ensemble-n", type=int, default=100000)
    ap.add_argument("--ensemble-kicks", type=int, default=100)
    ap.add_argument("--seeds", type=int, default=400)
    ap.add_argument("--poincare-kicks", type=int, default=500)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    print(f"backend: {_kernels.BACKEND}")
    rows = [
        ("ensemble_kick "
         f"({args.ensemble_n} pts x {args.ensemble_kicks} kicks)",
         *bench_ensemble(args.ensemble_n, args.ensemble_kicks, args.repeats)),
        (f"poincare_orbits ({args.seeds} seeds x {args.poincare_kicks} kicks)",
         *bench_poincare(args.seeds, args.poincare_kicks, args.repeats)),
    ]
    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'active':>10}  {'numpy':>10}  speedup")
    for name, t_active, t_numpy in rows:
        print(f"{name:<{width}}  {t_active:>9.4f}s  {t_numpy:>9.4f}s  "
              f"{t_numpy / t_active:.2f}x")


if __name__ == "__main__":
    main()
