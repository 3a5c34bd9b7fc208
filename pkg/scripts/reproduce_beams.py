"""Thirty-replicate runs of the cantilever and all ten I-beam cases.

Writes results/beams.csv (summary per problem), results/beams.json
(summaries plus best designs) and one trace CSV per problem.

    python scripts/reproduce_beams.py --seed 0 --workers 4
"""

import argparse
from pathlib import Path

from acoci import beams
from acoci.cli import experiment_record, format_stats_csv, format_stats_json, format_trace_csv
from acoci.core import SolverConfig
from acoci.harness import ExperimentPlan, run_experiment


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--replicates", type=int, default=30)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", type=Path, default=Path("results"))
    args = p.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    targets = {"cantilever": beams.CANTILEVER_OPTIMUM}
    problems = [beams.cantilever_problem()]
    for case in beams.ibeam_cases():
        problems.append(case.problem())
        targets[problems[-1].name] = case.target

    done = []
    for prob in problems:
        exp = run_experiment(ExperimentPlan(prob, SolverConfig(), args.replicates, args.seed), workers=args.workers)
        s = exp.summary
        rel = s.best / targets[prob.name] - 1.0
        print(f"{prob.name:16s} best={s.best:.6g} mean={s.mean:.6g} std={s.std:.2e} "
              f"iters={s.avg_iterations:.0f} vs reference {targets[prob.name]:.6g} ({rel:+.3%})")
        (args.out / f"trace_{prob.name}.csv").write_text(format_trace_csv(exp.best_run().trace))
        done.append((prob.name, exp))

    (args.out / "beams.csv").write_text(format_stats_csv([(n, e.summary) for n, e in done]))
    (args.out / "beams.json").write_text(format_stats_json([experiment_record(n, e) for n, e in done]))


if __name__ == "__main__":
    main()
