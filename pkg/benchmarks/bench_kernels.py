#!/usr/bin/env python3
"""Benchmark the compiled selection kernel against the pure-Python fallback.

Times the multiple-choice knapsack kernel on seeded random instances of
growing size and prints a small table with the speedup. Run with:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from skillplan.solver import kernels


def make_instance(rng, n_rows, n_objects, max_duration):
    weights = [[rng.randint(1, max_duration) for _ in range(n_objects)]
               for _ in range(n_rows)]
    profits = [[rng.randint(1, 10 ** 9) for _ in range(n_objects)]
               for _ in range(n_rows)]
    budget = sum(max(row) for row in weights) * 3 // 4
    return weights, profits, budget


def time_kernel(instances, force_pure, repeat):
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        for weights, profits, budget in instances:
            kernels.solve_rows(weights, profits, budget, force_pure=force_pure)
        best = min(best, time.perf_counter() - started)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions, best-of (default 3)")
    args = parser.parse_args()

    if not kernels.HAVE_COMPILED:
        print("compiled kernel unavailable; nothing to compare")
        return

    rng = random.Random(0)
    shapes = [(5, 4, 200), (20, 10, 500), (50, 20, 600), (100, 20, 600)]
    print(f"{'rows':>5} {'objects':>8} {'budget~':>9} "
          f"{'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for n_rows, n_objects, max_duration in shapes:
        instances = [make_instance(rng, n_rows, n_objects, max_duration)
                     for _ in range(5)]
        # Both kernels must agree before we time them.
        for weights, profits, budget in instances:
            assert (kernels.solve_rows(weights, profits, budget, force_pure=True)
                    == kernels.solve_rows(weights, profits, budget))
        pure = time_kernel(instances, True, args.repeat)
        compiled = time_kernel(instances, False, args.repeat)
        budget_hint = instances[0][2]
        print(f"{n_rows:>5} {n_objects:>8} {budget_hint:>9} "
              f"{pure:>10.4f} {compiled:>13.4f} {pure / compiled:>8.1f}x")


if __name__ == "__main__":
    main()
