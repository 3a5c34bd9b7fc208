"""Thirty-replicate runs over the benchmark registry.

Scalable functions run at ``--dim`` variables (30 by default). Each row is
printed next to the known optimum and, where one is listed, the reference
value for the hybrid method.

    python scripts/run_benchmarks.py --dim 2 --only sphere branin
"""

import argparse
from pathlib import Path

from acoci import benchmarks
from acoci.cli import experiment_record, format_stats_csv, format_stats_json
from acoci.core import SolverConfig
from acoci.harness import ExperimentPlan, run_experiment


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--only", nargs="+", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--replicates", type=int, default=30)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", type=Path, default=Path("results"))
    args = p.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    done = []
    for name in args.only or benchmarks.names():
        entry = benchmarks.get(name, args.dim if benchmarks.is_scalable(name) else None)
        plan = ExperimentPlan(entry.problem, SolverConfig(), args.replicates, args.seed)
        exp = run_experiment(plan, workers=args.workers)
        s = exp.summary
        ref = "" if entry.reference_best is None else f" reference={entry.reference_best:g} ({entry.table_row})"
        print(f"{name:16s} d={entry.problem.dimension:<3d} best={s.best:.8g} mean={s.mean:.8g} "
              f"known={entry.known_optimum:.8g}{ref}")
        done.append((name, exp))

    (args.out / "benchmarks.csv").write_text(format_stats_csv([(n, e.summary) for n, e in done]))
    (args.out / "benchmarks.json").write_text(format_stats_json([experiment_record(n, e) for n, e in done]))


if __name__ == "__main__":
    main()
