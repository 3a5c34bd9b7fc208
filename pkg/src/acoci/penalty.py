"""Static quadratic exterior penalty.

The solver only sees ``F(x) + coefficient * sum(max(0, g_j(x))**2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import EvaluationError, Problem

FEASIBILITY_TOL = 1e-8
DEFAULT_COEFFICIENT = 1e6


@dataclass(frozen=True, eq=False)
class PenaltyReport:
    raw_value: float
    violations: tuple[float, ...]
    penalized_value: float
    feasible: bool

    @property
    def max_violation(self) -> float:
        return max(self.violations, default=0.0)


def _finite(value, what: str) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError) as exc:
        raise EvaluationError(f"{what} returned a non-numeric value: {value!r}") from exc
    if not math.isfinite(value):
        raise EvaluationError(f"{what} returned a non-finite value ({value})")
    return value


def penalize(
    problem: Problem,
    x,
    coefficient: float = DEFAULT_COEFFICIENT,
    feasibility_tol: float = FEASIBILITY_TOL,
) -> PenaltyReport:
    if not coefficient > 0.0:
        raise ValueError(f"penalty coefficient must be positive, got {coefficient}")
    x = np.asarray(x, dtype=float)
    raw = _finite(problem.objective(x), f"objective of {problem.name!r}")
    violations = []
    for name, g in zip(problem.constraint_names, problem.constraints):
        gv = _finite(g(x), f"constraint {name!r} of {problem.name!r}")
        violations.append(max(0.0, gv))
    excess = sum(v * v for v in violations)
    penalized = raw + coefficient * excess if excess > 0.0 else raw
    if not math.isfinite(penalized):
        raise EvaluationError(f"penalized value of {problem.name!r} overflowed at x={x.tolist()}")
    feasible = all(v <= feasibility_tol for v in violations)
    return PenaltyReport(raw, tuple(violations), penalized, feasible)
