"""Hybrid ant colony / cohort intelligence optimizer for box-bounded problems."""

from .beams import cantilever_problem, ibeam_case, ibeam_cases, ibeam_problem
from .core import (
    AntState,
    Bounds,
    EvaluationError,
    IterationRecord,
    Problem,
    RunResult,
    SolverConfig,
    StatsSummary,
    ValidationError,
)
from .harness import ExperimentPlan, run_experiment, summarize
from .penalty import PenaltyReport, penalize
from .solver import optimize

__version__ = "0.1.0"

__all__ = [
    "AntState",
    "Bounds",
    "EvaluationError",
    "ExperimentPlan",
    "IterationRecord",
    "PenaltyReport",
    "Problem",
    "RunResult",
    "SolverConfig",
    "StatsSummary",
    "ValidationError",
    "cantilever_problem",
    "ibeam_case",
    "ibeam_cases",
    "ibeam_problem",
    "optimize",
    "penalize",
    "run_experiment",
    "summarize",
]
