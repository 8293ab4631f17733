"""Pure-Python multiple-choice knapsack kernel.

Exact integer arithmetic (arbitrary precision); used as the fallback when
the compiled kernel is unavailable or the scaled profits do not fit in 64
bits. Semantics are identical to the compiled kernel in ``_mckp.pyx``.
"""

from __future__ import annotations


def solve_rows(weights: list[list[int]], profits: list[list[int]],
               budget: int) -> list[int] | None:
    """Pick one item per row maximizing total profit within the weight budget.

    Items within a row are considered in the given order; among equal-profit
    optima the lexicographically smallest index vector is returned. Returns
    None when no selection fits the budget.
    """
    n = len(weights)
    if n == 0:
        return []

    # best[r][t]: max profit using rows r..n-1 with budget t, -1 if infeasible.
    best = [[-1] * (budget + 1) for _ in range(n + 1)]
    best[n] = [0] * (budget + 1)
    for r in range(n - 1, -1, -1):
        nxt = best[r + 1]
        cur = best[r]
        row = list(zip(weights[r], profits[r]))
        for t in range(budget + 1):
            m = -1
            for w, p in row:
                if w <= t:
                    v = nxt[t - w]
                    if v >= 0:
                        v += p
                        if v > m:
                            m = v
            cur[t] = m

    if best[0][budget] < 0:
        return None

    # Forward pass: taking the first (smallest-index) item that preserves
    # optimality yields the lexicographically smallest optimal vector.
    choice = []
    t = budget
    for r in range(n):
        target = best[r][t]
        nxt = best[r + 1]
        for i, (w, p) in enumerate(zip(weights[r], profits[r])):
            if w <= t and nxt[t - w] >= 0 and p + nxt[t - w] == target:
                choice.append(i)
                t -= w
                break
    return choice
