"""Exact solver for the best-learning-program selection problem.

One learning object per dependency-graph subject, maximizing the summed
bitrate subject to the user's time budget. This is a multiple-choice
knapsack; it is solved by dynamic programming over the integer duration
budget. Profits are scaled to exact integers (common duration denominator),
so both kernels return the true optimum with a deterministic tie-break:
the lexicographically smallest object-id vector in topological subject
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Union

from ..errors import InstanceTooLargeError
from ..graph import SubjectDependencyGraph
from ..model import LearningProgram
from . import kernels
from .feasible import FeasibleChoiceTable

# Documented limits: budgets beyond ~11.5 days are rejected, and the DP
# table is capped at ~400 MB of int64 cells.
MAX_TIME_LIMIT = 10 ** 6
MAX_DP_CELLS = 50_000_000

SUBJECT_HAS_NO_FEASIBLE_OBJECT = "subject-has-no-feasible-object"
TIME_BUDGET_EXCEEDED = "time-budget-exceeded"


@dataclass(frozen=True)
class InfeasibilityDiagnosis:
    kind: str
    subject_id: Optional[str] = None
    min_total_duration: Optional[int] = None
    max_time: Optional[float] = None

    def __str__(self) -> str:
        if self.kind == SUBJECT_HAS_NO_FEASIBLE_OBJECT:
            return f"{self.kind}: {self.subject_id}"
        return (f"{self.kind}: minimum total duration {self.min_total_duration}s "
                f"exceeds budget {self.max_time}s")


SolveResult = Union[LearningProgram, InfeasibilityDiagnosis]


def _empty_program(sdg: SubjectDependencyGraph) -> LearningProgram:
    return LearningProgram({}, frozenset(), Fraction(0))


def _order_pairs(sdg: SubjectDependencyGraph, assignment: dict[str, str]):
    return frozenset((assignment[a], assignment[b]) for a, b in sdg.arcs)


def solve_blp(sdg: SubjectDependencyGraph, table: FeasibleChoiceTable,
              max_time: float) -> SolveResult:
    """Compute the optimal program, or a diagnosis naming why none exists."""
    if max_time > MAX_TIME_LIMIT:
        raise InstanceTooLargeError(
            f"time budget {max_time}s exceeds the supported maximum {MAX_TIME_LIMIT}s")

    order = table.subject_order
    if not order:
        return _empty_program(sdg)

    for sid in order:
        if not table.rows[sid]:
            return InfeasibilityDiagnosis(SUBJECT_HAS_NO_FEASIBLE_OBJECT, subject_id=sid)

    rows = [table.rows[sid] for sid in order]
    min_total = sum(min(e.duration for e in row) for row in rows)
    if min_total > max_time:
        return InfeasibilityDiagnosis(
            TIME_BUDGET_EXCEEDED, min_total_duration=min_total, max_time=max_time)

    durations = [e.duration for row in rows for e in row]
    g = gcd(*durations) if len(durations) > 1 else durations[0]
    budget = int(max_time // g)
    budget = min(budget, sum(max(e.duration for e in row) for row in rows) // g)

    if (len(rows) + 1) * (budget + 1) > MAX_DP_CELLS:
        raise InstanceTooLargeError(
            f"DP table of {(len(rows) + 1) * (budget + 1)} cells exceeds the limit")

    scale = lcm(*durations) if len(durations) > 1 else durations[0]
    weights = [[e.duration // g for e in row] for row in rows]
    profits = [[e.size * (scale // e.duration) for e in row] for row in rows]

    worst_total = sum(max(p) for p in profits)
    force_pure = worst_total >= kernels.PROFIT_LIMIT or budget >= kernels.BUDGET_LIMIT
    choice = kernels.solve_rows(weights, profits, budget, force_pure=force_pure)
    if choice is None:  # unreachable given the min_total check; kept defensive
        return InfeasibilityDiagnosis(
            TIME_BUDGET_EXCEEDED, min_total_duration=min_total, max_time=max_time)

    assignment = {sid: rows[r][i].object_id for r, (sid, i) in enumerate(zip(order, choice))}
    total_profit = sum(profits[r][i] for r, i in enumerate(choice))
    return LearningProgram(assignment, _order_pairs(sdg, assignment),
                           Fraction(total_profit, scale))
