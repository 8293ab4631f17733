"""Exhaustive-enumeration oracle for the program selection problem.

Independent of the dynamic-programming path: sums bitrates as exact
fractions and walks every assignment in lexicographic object-id order, so
it realizes the same tie-break by construction.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..errors import InstanceTooLargeError
from ..graph import SubjectDependencyGraph
from ..model import LearningProgram
from .feasible import FeasibleChoiceTable
from .solve import (
    SUBJECT_HAS_NO_FEASIBLE_OBJECT,
    TIME_BUDGET_EXCEEDED,
    InfeasibilityDiagnosis,
    SolveResult,
    _order_pairs,
)

MAX_COMBINATIONS = 10 ** 6


def brute_force_blp(sdg: SubjectDependencyGraph, table: FeasibleChoiceTable,
                    max_time: float) -> SolveResult:
    order = table.subject_order
    if not order:
        return LearningProgram({}, frozenset(), Fraction(0))

    for sid in order:
        if not table.rows[sid]:
            return InfeasibilityDiagnosis(SUBJECT_HAS_NO_FEASIBLE_OBJECT, subject_id=sid)

    rows = [table.rows[sid] for sid in order]
    count = 1
    for row in rows:
        count *= len(row)
        if count > MAX_COMBINATIONS:
            raise InstanceTooLargeError(
                f"brute force over more than {MAX_COMBINATIONS} assignments")

    best_value = None
    best_combo = None
    for combo in itertools.product(*rows):
        if sum(e.duration for e in combo) > max_time:
            continue
        value = sum(Fraction(e.size, e.duration) for e in combo)
        if best_value is None or value > best_value:
            best_value = value
            best_combo = combo

    if best_combo is None:
        min_total = sum(min(e.duration for e in row) for row in rows)
        return InfeasibilityDiagnosis(
            TIME_BUDGET_EXCEEDED, min_total_duration=min_total, max_time=max_time)

    assignment = {sid: e.object_id for sid, e in zip(order, best_combo)}
    return LearningProgram(assignment, _order_pairs(sdg, assignment), best_value)
