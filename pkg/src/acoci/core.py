"""Shared records: problems, solver settings, ant state, traces and summaries."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

Objective = Callable[[np.ndarray], float]
Constraint = Callable[[np.ndarray], float]


class ValidationError(ValueError):
    """Raised when a record is constructed with inconsistent fields."""


class EvaluationError(RuntimeError):
    """An objective or constraint produced a non-finite value."""


@dataclass(frozen=True, eq=False)
class Bounds:
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float)).copy()
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float)).copy()
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise ValidationError(
                f"lower and upper must be 1-D with equal length, got {lower.shape} and {upper.shape}"
            )
        if lower.size < 1:
            raise ValidationError("bounds need at least one variable")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ValidationError("bounds must be finite")
        bad = np.flatnonzero(lower >= upper)
        if bad.size:
            raise ValidationError(f"lower must be < upper for every variable; violated at {bad.tolist()}")
        lower.flags.writeable = False
        upper.flags.writeable = False
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, low: float, high: float, dimension: int) -> "Bounds":
        return cls(np.full(dimension, low, dtype=float), np.full(dimension, high, dtype=float))

    @property
    def dimension(self) -> int:
        return int(self.lower.size)

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def contains(self, x, atol: float = 0.0) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower - atol) and np.all(x <= self.upper + atol))


@dataclass(frozen=True, eq=False)
class Problem:
    """A box-bounded minimization problem with inequality constraints ``g(x) <= 0``.

    ``known_optimum`` is reporting metadata and is never read by the solver.
    """

    name: str
    dimension: int
    objective: Objective
    bounds: Bounds
    constraints: tuple[Constraint, ...] = ()
    known_optimum: Optional[float] = None
    constraint_names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.name:
            raise ValidationError("problem name must be non-empty")
        if int(self.dimension) != self.dimension or self.dimension < 1:
            raise ValidationError(f"dimension must be a positive integer, got {self.dimension!r}")
        if self.bounds.dimension != self.dimension:
            raise ValidationError(
                f"bounds have {self.bounds.dimension} variables but dimension is {self.dimension}"
            )
        if not callable(self.objective):
            raise ValidationError("objective must be callable")
        constraints = tuple(self.constraints)
        for g in constraints:
            if not callable(g):
                raise ValidationError("every constraint must be callable")
        object.__setattr__(self, "constraints", constraints)
        names = tuple(self.constraint_names) or tuple(f"g{j + 1}" for j in range(len(constraints)))
        if len(names) != len(constraints):
            raise ValidationError("constraint_names must match the number of constraints")
        object.__setattr__(self, "constraint_names", names)

    @property
    def constrained(self) -> bool:
        return bool(self.constraints)


@dataclass(frozen=True)
class SolverConfig:
    ants: int = 30
    elites: int = 5
    reduction_factor: float = 0.95
    q_constant: float = 1.0
    evaporation: float = 0.1
    tau_init: float = 1.0
    convergence_tol: float = 1e-6
    max_iterations: int = 5000
    penalty_coefficient: float = 1e6
    seed: int = 0

    def __post_init__(self):
        errors = []
        if self.ants < 1:
            errors.append(f"ants must be >= 1 (got {self.ants})")
        if self.elites < 1:
            errors.append(f"elites must be >= 1 (got {self.elites})")
        if self.elites > self.ants:
            errors.append(f"elites ({self.elites}) cannot exceed ants ({self.ants})")
        if not 0.0 < self.reduction_factor < 1.0:
            errors.append(f"reduction_factor must lie in (0, 1) (got {self.reduction_factor})")
        if not (self.q_constant >= 0.0 and math.isfinite(self.q_constant)):
            errors.append(f"q_constant must be >= 0 (got {self.q_constant})")
        if not 0.0 <= self.evaporation < 1.0:
            errors.append(f"evaporation must lie in [0, 1) (got {self.evaporation})")
        if not (self.tau_init > 0.0 and math.isfinite(self.tau_init)):
            errors.append(f"tau_init must be > 0 (got {self.tau_init})")
        if not self.convergence_tol > 0.0:
            errors.append(f"convergence_tol must be > 0 (got {self.convergence_tol})")
        if self.max_iterations < 1:
            errors.append(f"max_iterations must be >= 1 (got {self.max_iterations})")
        if not self.penalty_coefficient > 0.0:
            errors.append(f"penalty_coefficient must be > 0 (got {self.penalty_coefficient})")
        if self.seed < 0:
            errors.append(f"seed must be unsigned (got {self.seed})")
        if errors:
            raise ValidationError("; ".join(errors))


@dataclass(eq=False)
class AntState:
    """One ant: where it sits, the box it samples from, and its pheromone.

    ``span`` is the nominal sampling width per variable before clipping the
    interval to the global bounds; it defaults to the interval width.
    Mutated in place by the solver during a single run.
    """

    position: np.ndarray
    interval_lower: np.ndarray
    interval_upper: np.ndarray
    pheromone: float
    raw_value: float = math.inf
    penalized_value: float = math.inf
    feasible: bool = False
    span: Optional[np.ndarray] = None

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=float)
        self.interval_lower = np.asarray(self.interval_lower, dtype=float)
        self.interval_upper = np.asarray(self.interval_upper, dtype=float)
        if not (self.position.shape == self.interval_lower.shape == self.interval_upper.shape):
            raise ValidationError("position and interval arrays must share one shape")
        if self.span is None:
            self.span = self.interval_upper - self.interval_lower
        else:
            self.span = np.asarray(self.span, dtype=float)
            if self.span.shape != self.position.shape or np.any(self.span <= 0.0):
                raise ValidationError("span must be positive and match the position shape")
        if np.any(self.interval_lower >= self.interval_upper):
            raise ValidationError("sampling interval must have lower < upper")
        if not self.pheromone > 0.0:
            raise ValidationError(f"pheromone must be positive (got {self.pheromone})")

    @property
    def interval_width(self) -> np.ndarray:
        return self.interval_upper - self.interval_lower


@dataclass(frozen=True)
class IterationRecord:
    """One row of the convergence trace.

    ``f_best`` is the best penalized value seen so far in the run,
    ``f_worst`` the worst penalized value of the current population and
    ``population_best`` the current population's best.
    """

    iteration: int
    f_best: float
    f_worst: float
    mean_interval_width: float
    tau_best: float
    evaluations_so_far: int
    population_best: float = math.nan

    def __post_init__(self):
        if self.f_best > self.f_worst:
            raise ValidationError(f"f_best ({self.f_best}) exceeds f_worst ({self.f_worst})")
        if math.isnan(self.population_best):
            object.__setattr__(self, "population_best", self.f_best)
        elif not self.f_best <= self.population_best <= self.f_worst:
            raise ValidationError("population_best must lie between f_best and f_worst")


@dataclass(frozen=True, eq=False)
class RunResult:
    best_position: np.ndarray
    best_raw_value: float
    best_penalized_value: float
    feasible: bool
    iterations: int
    function_evaluations: int
    wall_time: float
    trace: tuple[IterationRecord, ...] = ()
    converged: bool = False
    seed: Optional[int] = None

    @property
    def capped(self) -> bool:
        """True when the run stopped on the iteration cap rather than on convergence."""
        return not self.converged

    def same_outcome(self, other: "RunResult") -> bool:
        """Bitwise comparison of everything except wall time."""
        return (
            np.array_equal(self.best_position, other.best_position)
            and self.best_raw_value == other.best_raw_value
            and self.best_penalized_value == other.best_penalized_value
            and self.feasible == other.feasible
            and self.iterations == other.iterations
            and self.function_evaluations == other.function_evaluations
            and self.converged == other.converged
            and self.trace == other.trace
        )


@dataclass(frozen=True)
class StatsSummary:
    mean: float
    std: float
    best: float
    worst: float
    avg_iterations: float
    avg_evaluations: float
    avg_time: float
    replicates: int = 1
    failures: int = 0

    def __post_init__(self):
        # tolerance covers float rounding of the mean of near-identical values
        slack = 1e-12 * max(1.0, abs(self.mean))
        if not (self.best - slack <= self.mean <= self.worst + slack):
            raise ValidationError(
                f"expected best <= mean <= worst, got {self.best}, {self.mean}, {self.worst}"
            )
        if self.std < 0.0:
            raise ValidationError("std must be non-negative")


def as_point(x: Sequence[float], dimension: int) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.shape != (dimension,):
        raise ValueError(f"expected a point of dimension {dimension}, got shape {arr.shape}")
    return arr
