"""Hybrid ant colony / cohort intelligence search over a box.

Each iteration evaluates every ant, ranks them, lets every non-elite ant
pick an elite to follow by roulette wheel, shrinks each ant's sampling
interval around the followed elite by the reduction factor, reinforces the
best ant's pheromone, and resamples every ant inside its new interval.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import (
    AntState,
    Bounds,
    EvaluationError,
    IterationRecord,
    Problem,
    RunResult,
    SolverConfig,
)
from .penalty import penalize

log = logging.getLogger(__name__)

# floor of the positive shift applied to non-positive fitness values
SHIFT_FLOOR = 1e-9
SHIFT_SPREAD = 1e-3


@dataclass(frozen=True, eq=False)
class EliteSet:
    members: tuple[int, ...]
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if len(self.members) != w.size or w.size == 0:
            raise ValueError("elite members and weights must be non-empty and of equal length")
        if np.any(w <= 0.0) or abs(w.sum() - 1.0) > 1e-12:
            raise ValueError(f"elite weights must be positive and sum to 1, got {w}")
        object.__setattr__(self, "weights", w)

    @property
    def best(self) -> int:
        return self.members[0]


def sample_uniform(lower, upper, u) -> np.ndarray:
    """Map unit draws ``u`` onto ``[lower, upper]``."""
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    x = (upper - lower) * np.asarray(u, dtype=float) + lower
    # guard against lower + width * u rounding past upper
    return np.clip(x, lower, upper)


def shifted_fitness(values) -> np.ndarray:
    """Strictly positive stand-in for ``values`` that preserves their order.

    Positive inputs are returned unchanged so the inverse-fitness weights and
    the best/worst ratio keep their plain form. If any value is zero or
    negative the whole vector is moved to ``F - F_min + delta`` where
    ``delta = 1e-9 + 1e-3 * (F_max - F_min)``.
    """
    f = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(f)):
        raise EvaluationError("fitness values must be finite")
    if np.all(f > 0.0):
        return f.copy()
    lo, hi = float(f.min()), float(f.max())
    delta = SHIFT_FLOOR + SHIFT_SPREAD * (hi - lo)
    return f - lo + delta


def initialize_population(problem: Problem, config: SolverConfig, rng: np.random.Generator) -> list[AntState]:
    lower, upper = problem.bounds.lower, problem.bounds.upper
    u = rng.random((config.ants, problem.dimension))
    return [
        AntState(
            position=sample_uniform(lower, upper, u[a]),
            interval_lower=lower.copy(),
            interval_upper=upper.copy(),
            pheromone=config.tau_init,
        )
        for a in range(config.ants)
    ]


def initial_path_probability(population: Sequence[AntState], config: Optional[SolverConfig] = None) -> np.ndarray:
    tau = np.array([ant.pheromone for ant in population], dtype=float)
    if tau.size == 0 or np.any(tau <= 0.0):
        raise ValueError("path probabilities need a non-empty population with positive pheromone")
    return tau / tau.sum()


def select_elites(population: Sequence[AntState], config: SolverConfig) -> EliteSet:
    values = np.array([ant.penalized_value for ant in population], dtype=float)
    if not np.all(np.isfinite(values)):
        raise EvaluationError("cannot rank ants with non-finite penalized values")
    if len(population) < config.elites:
        raise ValueError(f"population of {len(population)} is smaller than elites={config.elites}")
    order = np.argsort(values, kind="stable")[: config.elites]
    fitness = shifted_fitness(values)[order]
    tau = np.array([population[i].pheromone for i in order], dtype=float)
    raw = tau / fitness
    return EliteSet(tuple(int(i) for i in order), raw / raw.sum())


def roulette_index(weights, u: float) -> int:
    """Index where the cumulative sum of ``weights`` first exceeds ``u``."""
    w = np.asarray(weights, dtype=float)
    if w.size == 0:
        raise ValueError("roulette wheel needs at least one weight")
    k = int(np.searchsorted(np.cumsum(w), u, side="right"))
    return min(k, w.size - 1)


def roulette_pick(weights, rng: np.random.Generator) -> int:
    if len(weights) == 0:
        raise ValueError("roulette wheel needs at least one weight")
    return roulette_index(weights, rng.random())


def assign_followers(population: Sequence[AntState], elites: EliteSet, rng: np.random.Generator) -> list[int]:
    """Ant index each ant follows: elites follow themselves, the rest spin the wheel."""
    elite_members = set(elites.members)
    follow = []
    for a in range(len(population)):
        if a in elite_members:
            follow.append(a)
        else:
            follow.append(elites.members[roulette_pick(elites.weights, rng)])
    return follow


def shrink_intervals(
    population: Sequence[AntState],
    elite_assignment: Sequence[int],
    config: SolverConfig,
    bounds: Bounds,
) -> None:
    """Contract every ant's interval by ``reduction_factor`` around its followed elite.

    The nominal span shrinks geometrically and the interval is that span
    centered on the elite, clipped to the global bounds. Clipping does not
    feed back into the next span, so a center resting against a bound keeps
    the same contraction rate as an interior one. Centers are read before
    any interval changes.
    """
    centers = [population[e].position.copy() for e in elite_assignment]
    r = config.reduction_factor
    for ant, c in zip(population, centers):
        span = r * ant.span
        half = span / 2.0
        lo = np.maximum(c - half, bounds.lower)
        hi = np.minimum(c + half, bounds.upper)
        # once half-width drops below the spacing of floats around c the interval collapses
        collapsed = hi <= lo
        if np.any(collapsed):
            lo = np.where(collapsed, np.maximum(np.nextafter(c, -np.inf), bounds.lower), lo)
            hi = np.where(collapsed, np.minimum(np.nextafter(c, np.inf), bounds.upper), hi)
        ant.span = span
        ant.interval_lower = lo
        ant.interval_upper = hi


def update_pheromones(
    population: Sequence[AntState],
    best_index: int,
    prev_f_best: float,
    prev_f_worst: float,
    config: SolverConfig,
) -> None:
    """Deposit on the best ant, then set every other ant from the best's new level."""
    if not prev_f_worst > 0.0 or not prev_f_best > 0.0:
        raise EvaluationError(
            f"pheromone ratio needs positive shifted values, got best={prev_f_best}, worst={prev_f_worst}"
        )
    if prev_f_best > prev_f_worst:
        raise ValueError("prev_f_best must not exceed prev_f_worst")
    best = population[best_index]
    best.pheromone = best.pheromone + config.q_constant * (prev_f_best / prev_f_worst)
    others = (1.0 - config.evaporation) * best.pheromone
    for a, ant in enumerate(population):
        if a != best_index:
            ant.pheromone = others


def resample(population: Sequence[AntState], rng: np.random.Generator) -> None:
    dim = population[0].position.size
    u = rng.random((len(population), dim))
    for ant, row in zip(population, u):
        ant.position = sample_uniform(ant.interval_lower, ant.interval_upper, row)


def check_convergence(record: IterationRecord, config: SolverConfig) -> bool:
    """True once the current population's spread has collapsed, or the cap is hit."""
    return spread_converged(record.population_best, record.f_worst, config.convergence_tol) or (
        record.iteration >= config.max_iterations
    )


def spread_converged(f_best: float, f_worst: float, tol: float) -> bool:
    return abs(f_worst - f_best) <= tol * max(1.0, abs(f_best))


def _evaluate(problem: Problem, population: Sequence[AntState], coefficient: float) -> None:
    for ant in population:
        rep = penalize(problem, ant.position, coefficient)
        ant.raw_value = rep.raw_value
        ant.penalized_value = rep.penalized_value
        ant.feasible = rep.feasible


def _better(candidate: AntState, incumbent: Optional[tuple]) -> bool:
    # feasible points beat infeasible ones; otherwise compare penalized values
    if incumbent is None:
        return True
    _, _, inc_pen, inc_feas = incumbent
    if candidate.feasible != inc_feas:
        return candidate.feasible
    return candidate.penalized_value < inc_pen


def optimize(problem: Problem, config: Optional[SolverConfig] = None, **overrides) -> RunResult:
    """Run the search once and return the best point found together with its trace.

    The reported point prefers feasible solutions: among feasible points the
    lowest objective wins, and an infeasible point is reported only when no
    feasible one was ever sampled. The trace's ``f_best`` column is the
    best penalized value seen so far.
    """
    if config is None:
        config = SolverConfig(**overrides)
    elif overrides:
        config = SolverConfig(**{**config.__dict__, **overrides})
    start = time.perf_counter()
    rng = np.random.default_rng(config.seed)
    population = initialize_population(problem, config, rng)

    trace: list[IterationRecord] = []
    best_penalized = math.inf
    incumbent = None  # (position, raw, penalized, feasible)
    evaluations = 0
    converged = False
    iteration = 0

    while True:
        iteration += 1
        _evaluate(problem, population, config.penalty_coefficient)
        evaluations += len(population)

        for ant in population:
            if _better(ant, incumbent):
                incumbent = (ant.position.copy(), ant.raw_value, ant.penalized_value, ant.feasible)
            if ant.penalized_value < best_penalized:
                best_penalized = ant.penalized_value

        values = np.array([ant.penalized_value for ant in population])
        f_worst = float(values.max())
        f_current = float(values.min())
        converged = spread_converged(f_current, f_worst, config.convergence_tol)
        done = converged or iteration >= config.max_iterations

        if not done:
            elites = select_elites(population, config)
            follow = assign_followers(population, elites, rng)
            shrink_intervals(population, follow, config, problem.bounds)
            shifted = shifted_fitness(values)
            update_pheromones(population, elites.best, float(shifted.min()), float(shifted.max()), config)
            tau_best = population[elites.best].pheromone
        else:
            tau_best = population[int(np.argmin(values))].pheromone

        width = float(np.mean([ant.interval_width for ant in population]))
        trace.append(
            IterationRecord(iteration, best_penalized, f_worst, width, tau_best, evaluations, f_current)
        )
        if done:
            break
        resample(population, rng)

    position, raw, pen, feasible = incumbent
    elapsed = time.perf_counter() - start
    log.debug(
        "%s: best=%.10g after %d iterations (%s)",
        problem.name, raw, iteration, "converged" if converged else "capped",
    )
    return RunResult(
        best_position=position,
        best_raw_value=raw,
        best_penalized_value=pen,
        feasible=feasible,
        iterations=iteration,
        function_evaluations=evaluations,
        wall_time=elapsed,
        trace=tuple(trace),
        converged=converged,
        seed=config.seed,
    )
