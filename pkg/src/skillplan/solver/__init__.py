from .check import check_program
from .feasible import ChoiceEntry, FeasibleChoiceTable, effective_bandwidth, filter_feasible
from .kernels import HAVE_COMPILED, kernel_name
from .oracle import brute_force_blp
from .solve import (
    SUBJECT_HAS_NO_FEASIBLE_OBJECT,
    TIME_BUDGET_EXCEEDED,
    InfeasibilityDiagnosis,
    SolveResult,
    solve_blp,
)

__all__ = [
    "ChoiceEntry",
    "FeasibleChoiceTable",
    "HAVE_COMPILED",
    "InfeasibilityDiagnosis",
    "SUBJECT_HAS_NO_FEASIBLE_OBJECT",
    "SolveResult",
    "TIME_BUDGET_EXCEEDED",
    "brute_force_blp",
    "check_program",
    "effective_bandwidth",
    "filter_feasible",
    "kernel_name",
    "solve_blp",
]
