"""Command-line driver.

    acoci solve --problem sphere --dim 2 --trace trace.csv
    acoci bench --replicates 30 --output table.csv
    acoci beam cantilever --replicates 30 --seed 42
    acoci beam ibeam --case 1
    acoci cases

Exit codes: 0 success, 1 usage error, 2 runtime or evaluation error.
The default seed base comes from ``ACOCI_SEED`` when ``--seed`` is absent.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Optional, Sequence

from . import beams, benchmarks
from .core import Problem, SolverConfig, StatsSummary
from .harness import Experiment, ExperimentPlan, run_experiment

SEED_ENV = "ACOCI_SEED"
STATS_COLUMNS = (
    "problem", "replicates", "mean", "std", "best", "worst",
    "avg_iterations", "avg_evaluations", "avg_time_s",
)
TRACE_COLUMNS = ("iteration", "f_best", "f_worst", "mean_interval_width", "tau_best", "evaluations")

EXIT_OK, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2

log = logging.getLogger("acoci")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _g6(value) -> str:
    return f"{value:.6g}"


# --- output ----------------------------------------------------------------


def stats_row(problem: str, summary: StatsSummary) -> dict:
    return {
        "problem": problem,
        "replicates": summary.replicates,
        "mean": summary.mean,
        "std": summary.std,
        "best": summary.best,
        "worst": summary.worst,
        "avg_iterations": summary.avg_iterations,
        "avg_evaluations": summary.avg_evaluations,
        "avg_time_s": summary.avg_time,
    }


def format_stats_csv(rows: Sequence[tuple[str, StatsSummary]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(STATS_COLUMNS)
    for name, summary in rows:
        row = stats_row(name, summary)
        writer.writerow(
            [row["problem"], row["replicates"]] + [_g6(row[c]) for c in STATS_COLUMNS[2:]]
        )
    return buf.getvalue()


def experiment_record(name: str, experiment: Experiment) -> dict:
    best = experiment.best_run()
    return {
        "problem": name,
        "summary": asdict(experiment.summary),
        "best_position": best.best_position.tolist(),
        "best_feasible": best.feasible,
        "failures": [asdict(f) for f in experiment.failures],
    }


def format_stats_json(records: Sequence[dict]) -> str:
    return json.dumps(list(records), indent=2) + "\n"


def summary_from_json(record: dict) -> StatsSummary:
    return StatsSummary(**record["summary"])


def format_trace_csv(trace) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TRACE_COLUMNS)
    for rec in trace:
        writer.writerow(
            [
                rec.iteration,
                _g6(rec.f_best),
                _g6(rec.f_worst),
                _g6(rec.mean_interval_width),
                _g6(rec.tau_best),
                rec.evaluations_so_far,
            ]
        )
    return buf.getvalue()


def _emit(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text)


# --- argument handling -----------------------------------------------------


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return 0
    try:
        seed = int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an unsigned integer, got {raw!r}") from None
    if seed < 0:
        raise UsageError(f"{SEED_ENV} must be an unsigned integer, got {raw!r}")
    return seed


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    d = SolverConfig()
    g = p.add_argument_group("solver")
    g.add_argument("--ants", type=int, default=d.ants)
    g.add_argument("--elites", type=int, default=d.elites)
    g.add_argument("--reduction-factor", type=float, default=d.reduction_factor)
    g.add_argument("--q-constant", type=float, default=d.q_constant)
    g.add_argument("--evaporation", type=float, default=d.evaporation)
    g.add_argument("--tau-init", type=float, default=d.tau_init)
    g.add_argument("--convergence-tol", type=float, default=d.convergence_tol)
    g.add_argument("--max-iterations", type=int, default=d.max_iterations)
    g.add_argument("--penalty-coefficient", type=float, default=d.penalty_coefficient)
    g.add_argument("--seed", type=int, default=None, help=f"seed base (default: ${SEED_ENV} or 0)")
    o = p.add_argument_group("experiment")
    o.add_argument("--replicates", type=int, default=30)
    o.add_argument("--workers", type=int, default=1)
    o.add_argument("--format", choices=("csv", "json"), default="csv")
    o.add_argument("--output", "-o", default=None, help="stats file (default: stdout)")
    o.add_argument("--trace", default=None, help="per-iteration CSV of the best replicate")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="acoci", description="Hybrid ant colony / cohort intelligence optimizer")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = sub.add_parser("solve", help="run one registered benchmark problem")
    solve.add_argument("--problem", required=True)
    solve.add_argument("--dim", type=int, default=None)
    _add_run_flags(solve)

    bench = sub.add_parser("bench", help="run every registered benchmark")
    bench.add_argument("--dim", type=int, default=None, help="dimension of scalable functions")
    bench.add_argument("--only", nargs="+", default=None, metavar="NAME")
    _add_run_flags(bench)

    beam = sub.add_parser("beam", help="run a beam design problem")
    beam.add_argument("which", choices=("cantilever", "ibeam"))
    beam.add_argument("--case", type=int, default=None)
    beam.add_argument("--length", type=float, default=None)
    beam.add_argument("--load", type=float, default=None)
    beam.add_argument("--lateral-load", type=float, default=beams.IBEAM_Q)
    beam.add_argument("--modulus", type=float, default=beams.IBEAM_E)
    _add_run_flags(beam)

    cases = sub.add_parser("cases", help="list the I-beam load cases")
    cases.add_argument("--format", choices=("csv", "json"), default="csv")
    cases.add_argument("--output", "-o", default=None)
    return parser


def _config(args) -> SolverConfig:
    return SolverConfig(
        ants=args.ants,
        elites=args.elites,
        reduction_factor=args.reduction_factor,
        q_constant=args.q_constant,
        evaporation=args.evaporation,
        tau_init=args.tau_init,
        convergence_tol=args.convergence_tol,
        max_iterations=args.max_iterations,
        penalty_coefficient=args.penalty_coefficient,
        seed=args.seed,
    )


def _beam_problem(args) -> Problem:
    if args.which == "cantilever":
        if args.case is not None or args.length is not None or args.load is not None:
            raise UsageError("cantilever takes no --case/--length/--load")
        return beams.cantilever_problem()
    if args.case is not None:
        if args.length is not None or args.load is not None:
            raise UsageError("use either --case or --length/--load, not both")
        try:
            case = beams.ibeam_case(args.case)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        length, load = case.length, case.load
    elif args.length is not None and args.load is not None:
        length, load = args.length, args.load
    else:
        raise UsageError("ibeam needs --case N or both --length and --load")
    name = f"ibeam-case{args.case}" if args.case is not None else None
    return beams.ibeam_problem(length, load, args.lateral_load, args.modulus, name=name)


def _run(problems: Sequence[Problem], args) -> int:
    config = _config(args)
    experiments = []
    for problem in problems:
        plan = ExperimentPlan(problem, config, replicates=args.replicates, seed_base=args.seed)
        exp = run_experiment(plan, workers=args.workers)
        log.info("%s: best=%.6g mean=%.6g", problem.name, exp.summary.best, exp.summary.mean)
        experiments.append((problem.name, exp))
    if args.format == "csv":
        text = format_stats_csv([(name, exp.summary) for name, exp in experiments])
    else:
        text = format_stats_json([experiment_record(name, exp) for name, exp in experiments])
    _emit(text, args.output)
    if args.trace:
        # one problem per trace file; for bench the last problem's best run wins
        _emit(format_trace_csv(experiments[-1][1].best_run().trace), args.trace)
    return EXIT_OK


def _cases(args) -> int:
    rows = [
        {"case": c.case, "length": c.length, "load": c.load, "target": c.target}
        for c in beams.ibeam_cases()
    ]
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.output)
    return EXIT_OK


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
        if args.command == "cases":
            return _cases(args)
        if args.seed is None:
            args.seed = _default_seed()
        if args.replicates < 1:
            raise UsageError("--replicates must be >= 1")
        _config(args)  # validate before any work
        if args.command == "solve":
            entry = benchmarks.get(args.problem, args.dim)
            return _run([entry.problem], args)
        if args.command == "bench":
            selected = args.only or benchmarks.names()
            problems = [
                benchmarks.get(n, args.dim if benchmarks.is_scalable(n) else None).problem for n in selected
            ]
            return _run(problems, args)
        return _run([_beam_problem(args)], args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
