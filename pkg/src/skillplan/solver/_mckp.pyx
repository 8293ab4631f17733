# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled multiple-choice knapsack kernel.

Exact int64 arithmetic; the dispatcher only routes instances here after
checking that scaled profits and the budget fit the 64-bit bounds.
Semantics match ``_mckp_py.solve_rows`` exactly.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


def solve_rows(list weights, list profits, long long budget):
    """Pick one item per row maximizing total profit within the weight budget.

    Returns the lexicographically smallest optimal index vector, or None
    when no selection fits the budget.
    """
    cdef Py_ssize_t n = len(weights)
    if n == 0:
        return []

    cdef Py_ssize_t total_items = 0
    cdef Py_ssize_t r, i
    for r in range(n):
        total_items += len(weights[r])

    cdef int64_t *w = <int64_t *> malloc(total_items * sizeof(int64_t))
    cdef int64_t *p = <int64_t *> malloc(total_items * sizeof(int64_t))
    cdef Py_ssize_t *offsets = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t ncells = (n + 1) * (budget + 1)
    cdef int64_t *best = <int64_t *> malloc(ncells * sizeof(int64_t))
    if w == NULL or p == NULL or offsets == NULL or best == NULL:
        free(w); free(p); free(offsets); free(best)
        raise MemoryError()

    cdef Py_ssize_t k = 0
    offsets[0] = 0
    for r in range(n):
        row_w = weights[r]
        row_p = profits[r]
        for i in range(len(row_w)):
            w[k] = row_w[i]
            p[k] = row_p[i]
            k += 1
        offsets[r + 1] = k

    cdef long long B = budget
    cdef long long t
    cdef int64_t m, v
    cdef Py_ssize_t base, nxt_base

    try:
        base = n * (B + 1)
        for t in range(B + 1):
            best[base + t] = 0
        for r in range(n - 1, -1, -1):
            base = r * (B + 1)
            nxt_base = (r + 1) * (B + 1)
            for t in range(B + 1):
                m = -1
                for i in range(offsets[r], offsets[r + 1]):
                    if w[i] <= t:
                        v = best[nxt_base + t - w[i]]
                        if v >= 0:
                            v = v + p[i]
                            if v > m:
                                m = v
                best[base + t] = m

        if best[B] < 0:
            return None

        choice = []
        t = B
        for r in range(n):
            base = r * (B + 1)
            nxt_base = (r + 1) * (B + 1)
            m = best[base + t]
            for i in range(offsets[r], offsets[r + 1]):
                if w[i] <= t and best[nxt_base + t - w[i]] >= 0 \
                        and p[i] + best[nxt_base + t - w[i]] == m:
                    choice.append(i - offsets[r])
                    t -= w[i]
                    break
        return choice
    finally:
        free(w)
        free(p)
        free(offsets)
        free(best)
