"""Repeated independent runs of one problem and their summary statistics."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from .core import Problem, RunResult, SolverConfig, StatsSummary
from .solver import optimize

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ExperimentPlan:
    """Replicate ``k`` runs with ``seed = seed_base + k``; ``config.seed`` is ignored."""

    problem: Problem
    config: SolverConfig = field(default_factory=SolverConfig)
    replicates: int = 30
    seed_base: int = 0

    def __post_init__(self):
        if self.replicates < 1:
            raise ValueError(f"replicates must be >= 1, got {self.replicates}")
        if self.seed_base < 0:
            raise ValueError(f"seed_base must be unsigned, got {self.seed_base}")

    def seed(self, k: int) -> int:
        return self.seed_base + k


@dataclass(frozen=True, eq=False)
class ReplicateFailure:
    replicate: int
    seed: int
    error: str


@dataclass(frozen=True, eq=False)
class Experiment:
    summary: StatsSummary
    results: tuple[Optional[RunResult], ...]
    failures: tuple[ReplicateFailure, ...] = ()

    @property
    def successes(self) -> list[RunResult]:
        return [r for r in self.results if r is not None]

    def __iter__(self):
        # unpacks as (summary, results)
        return iter((self.summary, self.results))

    def best_run(self) -> RunResult:
        return min(self.successes, key=lambda r: (not r.feasible, r.best_raw_value))


def summarize(results: Sequence[RunResult], failures: int = 0) -> StatsSummary:
    """Population (divide-by-n) statistics over each run's best raw value."""
    if not results:
        raise ValueError("cannot summarize an empty list of runs")
    values = np.array([r.best_raw_value for r in results], dtype=float)
    return StatsSummary(
        mean=float(np.mean(values)),
        std=float(np.std(values)),
        best=float(np.min(values)),
        worst=float(np.max(values)),
        avg_iterations=float(np.mean([r.iterations for r in results])),
        avg_evaluations=float(np.mean([r.function_evaluations for r in results])),
        avg_time=float(np.mean([r.wall_time for r in results])),
        replicates=len(results),
        failures=failures,
    )


def _run_one(plan: ExperimentPlan, k: int):
    seed = plan.seed(k)
    try:
        result = optimize(plan.problem, replace(plan.config, seed=seed))
    except Exception as exc:  # recorded per replicate, never dropped silently
        log.warning("replicate %d (seed %d) of %s failed: %s", k, seed, plan.problem.name, exc)
        return ReplicateFailure(k, seed, f"{type(exc).__name__}: {exc}")
    if not math.isfinite(result.best_raw_value):
        return ReplicateFailure(k, seed, f"non-finite best value {result.best_raw_value}")
    return result


def run_experiment(plan: ExperimentPlan, workers: int = 1, order: Optional[Sequence[int]] = None) -> Experiment:
    """Run every replicate of ``plan`` and aggregate in replicate-index order.

    ``order`` only changes the execution order (useful for checking that the
    summary does not depend on it).
    """
    indices = list(range(plan.replicates)) if order is None else list(order)
    if sorted(indices) != list(range(plan.replicates)):
        raise ValueError("order must be a permutation of the replicate indices")
    outcomes: dict[int, object] = {}
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for k, out in zip(indices, pool.map(lambda k: _run_one(plan, k), indices)):
                outcomes[k] = out
    else:
        for k in indices:
            outcomes[k] = _run_one(plan, k)

    results: list[Optional[RunResult]] = []
    failures: list[ReplicateFailure] = []
    for k in range(plan.replicates):
        out = outcomes[k]
        if isinstance(out, ReplicateFailure):
            failures.append(out)
            results.append(None)
        else:
            results.append(out)
    ok = [r for r in results if r is not None]
    if not ok:
        raise RuntimeError(f"all {plan.replicates} replicates of {plan.problem.name} failed: {failures[0].error}")
    return Experiment(summarize(ok, failures=len(failures)), tuple(results), tuple(failures))
