"""Device- and bandwidth-adaptive learning program planner."""

from .graph import SubjectDependencyGraph, build_sdg, topological_order
from .model import (
    Catalog,
    DeviceProfile,
    LearningObject,
    LearningProgram,
    SessionEnvironment,
    Skill,
    Subject,
    UserProfile,
    ValidationReport,
    validate_catalog,
)
from .solver import (
    InfeasibilityDiagnosis,
    brute_force_blp,
    check_program,
    filter_feasible,
    kernel_name,
    solve_blp,
)

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "DeviceProfile",
    "InfeasibilityDiagnosis",
    "LearningObject",
    "LearningProgram",
    "SessionEnvironment",
    "Skill",
    "Subject",
    "SubjectDependencyGraph",
    "UserProfile",
    "ValidationReport",
    "brute_force_blp",
    "build_sdg",
    "check_program",
    "filter_feasible",
    "kernel_name",
    "solve_blp",
    "topological_order",
    "validate_catalog",
]
