import math

import numpy as np
import pytest

from acoci.core import Bounds, Problem, RunResult, SolverConfig
from acoci.harness import ExperimentPlan, run_experiment, summarize

from conftest import quadratic_problem


def fake_run(value, iterations=10, evals=300, t=0.5):
    return RunResult(np.zeros(1), value, value, True, iterations, evals, t)


class TestSummarize:
    def test_population_std(self):
        s = summarize([fake_run(v) for v in (1.0, 2.0, 3.0)])
        assert (s.mean, s.best, s.worst) == (2.0, 1.0, 3.0)
        assert s.std == pytest.approx(math.sqrt(2.0 / 3.0))
        assert s.std == pytest.approx(0.8165, abs=1e-4)

    def test_identical(self):
        assert summarize([fake_run(4.2)] * 4).std == 0.0

    def test_single(self):
        s = summarize([fake_run(5.0, iterations=7, evals=70, t=0.25)])
        assert s.mean == s.best == s.worst == 5.0 and s.std == 0.0
        assert (s.avg_iterations, s.avg_evaluations, s.avg_time) == (7.0, 70.0, 0.25)

    def test_averages(self):
        s = summarize([fake_run(1.0, 10, 100, 1.0), fake_run(1.0, 20, 200, 3.0)])
        assert (s.avg_iterations, s.avg_evaluations, s.avg_time) == (15.0, 150.0, 2.0)

    def test_empty(self):
        with pytest.raises(ValueError):
            summarize([])


def sphere2():
    return quadratic_problem([0.0, 0.0], [-5.0, -5.0], [5.0, 5.0], name="sphere2")


def test_single_replicate():
    summary, results = run_experiment(ExperimentPlan(sphere2(), replicates=1))
    assert len(results) == 1
    assert summary.mean == summary.best == summary.worst and summary.std == 0.0


def test_seed_schedule():
    exp = run_experiment(ExperimentPlan(sphere2(), SolverConfig(seed=999), replicates=3, seed_base=40))
    assert [r.seed for r in exp.results] == [40, 41, 42]


def test_order_and_workers_do_not_matter():
    plan = ExperimentPlan(sphere2(), SolverConfig(max_iterations=50), replicates=5, seed_base=7)
    a = run_experiment(plan)
    b = run_experiment(plan, order=[4, 2, 0, 3, 1])
    c = run_experiment(plan, workers=3)
    for other in (b, c):
        assert [r.best_raw_value for r in a.results] == [r.best_raw_value for r in other.results]
        sa, so = a.summary, other.summary
        assert (sa.mean, sa.std, sa.best, sa.worst, sa.avg_iterations, sa.avg_evaluations) == (
            so.mean, so.std, so.best, so.worst, so.avg_iterations, so.avg_evaluations
        )


def test_bad_order():
    with pytest.raises(ValueError):
        run_experiment(ExperimentPlan(sphere2(), replicates=2), order=[0, 0])


def test_failure_counted_in_summary():
    calls = {"n": 0}

    def sometimes_nan(x):
        calls["n"] += 1
        return float("nan") if calls["n"] == 1 else float(x[0] ** 2)

    prob = Problem("once", 1, sometimes_nan, Bounds(-1.0, 1.0))
    exp = run_experiment(ExperimentPlan(prob, SolverConfig(max_iterations=20), replicates=3))
    assert exp.summary.failures == 1 and exp.summary.replicates == 2
    assert exp.results[0] is None and exp.failures[0].replicate == 0
    assert "EvaluationError" in exp.failures[0].error


def test_all_failed_raises():
    prob = Problem("nan", 1, lambda x: float("nan"), Bounds(0.0, 1.0))
    with pytest.raises(RuntimeError, match="all 2 replicates"):
        run_experiment(ExperimentPlan(prob, replicates=2))


def test_plan_validation():
    with pytest.raises(ValueError):
        ExperimentPlan(sphere2(), replicates=0)
    with pytest.raises(ValueError):
        ExperimentPlan(sphere2(), seed_base=-1)
