"""Command line harness: solve, oracle, metrics, descent, sample.

Exit codes: 0 success, 2 malformed request (bad flags or values,
enumeration guard), 3 unreadable or unparseable input, 4 unwritable
output. Identical invocations write byte-identical files.
"""

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .metrics import (
    brute_force_pareto,
    d_metrics,
    parse_front_points,
    pooled_reference,
    render_front_points,
    render_metric_report,
)
from .problem import Instance, ParseError, assign_due_dates, parse_due_dates, parse_taillard
from .solvers import SolverConfig, descent_stats, mos_run, pils_run, random_sample, render_run_result

EXIT_OK = 0
EXIT_BAD_REQUEST = 2
EXIT_BAD_INPUT = 3
EXIT_BAD_OUTPUT = 4

ALGORITHMS = ("pils", "mos", "sample")


class InputError(Exception):
    """An input file could not be read."""


class OutputError(Exception):
    """An output path could not be written."""


@dataclass
class ExperimentSpec:
    """Validated description of one solve invocation."""

    instance_path: str
    algorithms: tuple
    runs: int
    budget: int
    seed: int
    out_dir: str
    due_dates_path: str | None = None
    tau: float | None = None
    reference_path: str | None = None

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be at least 1")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        seen = []
        for algo in self.algorithms:
            if algo not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {algo!r}, expected one of {', '.join(ALGORITHMS)}")
            if algo not in seen:
                seen.append(algo)
        if not seen:
            raise ValueError("need at least one algorithm")
        self.algorithms = tuple(seen)


def _read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _write_text(path, text: str):
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from None


def _load_instance(args) -> Instance:
    path = Path(args.instance)
    inst = parse_taillard(_read_text(path), name=path.stem)
    if getattr(args, "due_dates", None) is not None:
        dates = parse_due_dates(_read_text(args.due_dates), inst.n)
        inst = assign_due_dates(inst, due_dates=dates)
    elif getattr(args, "tau", None) is not None:
        inst = assign_due_dates(inst, tau=args.tau)
    return inst


def render_scatter(vectors) -> str:
    """Objective vectors one per line, draw order preserved."""
    return "".join(f"{c} {t}\n" for c, t in vectors)


def render_descent_report(name: str, n: int, m: int, counts) -> str:
    mean = math.fsum(counts) / len(counts)
    return (
        f"instance {name}\n"
        f"jobs {n}\n"
        f"machines {m}\n"
        f"repetitions {len(counts)}\n"
        f"mean {mean:.6f}\n"
        "counts " + " ".join(str(c) for c in counts) + "\n"
    )


def parse_descent_report(text: str) -> dict:
    fields = {}
    for raw in text.splitlines():
        if raw.strip():
            key, _, value = raw.partition(" ")
            fields[key] = value
    return {
        "instance": fields["instance"],
        "jobs": int(fields["jobs"]),
        "machines": int(fields["machines"]),
        "repetitions": int(fields["repetitions"]),
        "mean": float(fields["mean"]),
        "counts": tuple(int(v) for v in fields["counts"].split()),
    }


def render_summary(name: str, reference_label: str, reference_size: int, rows) -> str:
    lines = [
        f"instance {name}",
        f"reference {reference_label}",
        f"reference_size {reference_size}",
        "columns algorithm runs mean_d1 mean_d2",
    ]
    for algo, runs, mean_d1, mean_d2 in rows:
        lines.append(f"{algo} {runs} {mean_d1:.10f} {mean_d2:.10f}")
    return "\n".join(lines) + "\n"


def parse_summary(text: str) -> dict:
    lines = [raw for raw in text.splitlines() if raw.strip()]
    head = dict(raw.partition(" ")[::2] for raw in lines[:3])
    rows = {}
    for raw in lines[4:]:
        algo, runs, d1, d2 = raw.split()
        rows[algo] = {"runs": int(runs), "mean_d1": float(d1), "mean_d2": float(d2)}
    return {
        "instance": head["instance"],
        "reference": head["reference"],
        "reference_size": int(head["reference_size"]),
        "rows": rows,
    }


def run_experiment(spec: ExperimentSpec, inst: Instance) -> int:
    out = Path(spec.out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputError(f"cannot create {out}: {exc}") from None

    results = {}
    for algo in spec.algorithms:
        for i in range(spec.runs):
            run_seed = spec.seed + i
            if algo == "sample":
                vectors = random_sample(inst, spec.budget, run_seed)
                _write_text(out / f"sample_run{i:03d}.txt", render_scatter(vectors))
                continue
            cfg = SolverConfig(budget=spec.budget, seed=run_seed, record_trace=True)
            result = pils_run(inst, cfg) if algo == "pils" else mos_run(inst, cfg)
            _write_text(out / f"{algo}_run{i:03d}.txt", render_run_result(result))
            results.setdefault(algo, []).append(result)

    if not results:
        return EXIT_OK

    if spec.reference_path is not None:
        reference = parse_front_points(_read_text(spec.reference_path))
        reference_label = str(spec.reference_path)
    else:
        fronts = [[obj for _, obj in res.front] for runs in results.values() for res in runs]
        reference = pooled_reference(fronts)
        reference_label = "pooled"
        _write_text(out / "reference.txt", render_front_points(reference))

    summary_rows = []
    for algo, runs in results.items():
        d1s = []
        d2s = []
        for i, res in enumerate(runs):
            report = d_metrics(reference, [obj for _, obj in res.front])
            _write_text(out / f"{algo}_run{i:03d}_metrics.txt", render_metric_report(report))
            d1s.append(report.d1)
            d2s.append(report.d2)
        summary_rows.append((algo, len(runs), math.fsum(d1s) / len(d1s), math.fsum(d2s) / len(d2s)))
    _write_text(out / "summary.txt", render_summary(inst.name, reference_label, len(reference), summary_rows))

    print(f"instance {inst.name}  reference {reference_label} ({len(reference)} points)")
    print(f"{'algorithm':<10} {'runs':>4} {'D1':>8} {'D2':>8}")
    for algo, count, mean_d1, mean_d2 in summary_rows:
        print(f"{algo:<10} {count:>4} {mean_d1:>8.4f} {mean_d2:>8.4f}")
    return EXIT_OK


def cmd_solve(args) -> int:
    algorithms = tuple(tok.strip() for tok in args.algo.split(",") if tok.strip())
    spec = ExperimentSpec(
        instance_path=args.instance,
        algorithms=algorithms,
        runs=args.runs,
        budget=args.budget,
        seed=args.seed,
        out_dir=args.out,
        due_dates_path=args.due_dates,
        tau=args.tau,
        reference_path=args.reference,
    )
    return run_experiment(spec, _load_instance(args))


def cmd_oracle(args) -> int:
    inst = _load_instance(args)
    front = brute_force_pareto(inst)
    _write_text(args.out, render_front_points([vec for vec, _ in front]))
    print(f"{len(front)} front points")
    return EXIT_OK


def cmd_metrics(args) -> int:
    reference = parse_front_points(_read_text(args.reference))
    approx = parse_front_points(_read_text(args.approx))
    report = d_metrics(reference, approx)
    print(f"{report.d1:.4f} {report.d2:.4f}")
    return EXIT_OK


def cmd_descent(args) -> int:
    inst = _load_instance(args)
    counts = descent_stats(inst, args.repetitions, args.seed)
    _write_text(args.out, render_descent_report(inst.name, inst.n, inst.m, counts))
    mean = math.fsum(counts) / len(counts)
    print(f"{inst.name}  n={inst.n}  mean_evaluations={mean:.1f}")
    return EXIT_OK


def cmd_sample(args) -> int:
    inst = _load_instance(args)
    vectors = random_sample(inst, args.count, args.seed)
    _write_text(args.out, render_scatter(vectors))
    print(f"{len(vectors)} samples")
    return EXIT_OK


def _add_instance_options(parser):
    parser.add_argument("--instance", required=True, help="processing-time file, benchmark layout")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--due-dates", help="due-date file, one integer per job")
    group.add_argument("--tau", type=float, help="due-date tightness: d = round(tau * identity completion)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pils",
        description="Bi-objective flow shop search (makespan, total tardiness).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run solvers and score them against a reference front")
    _add_instance_options(p)
    p.add_argument("--algo", default="pils,mos", help="comma list from: pils, mos, sample")
    p.add_argument("--runs", type=int, default=1)
    p.add_argument("--budget", type=int, required=True, help="evaluations per run (samples for sample)")
    p.add_argument("--seed", type=int, default=0, help="base seed; run i uses seed+i")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--reference", help="reference front file; defaults to pooling the runs")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exact front by full enumeration (small n)")
    _add_instance_options(p)
    p.add_argument("--out", required=True, help="reference front file to write")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("metrics", help="d1/d2 of an approximation front against a reference")
    p.add_argument("--reference", required=True)
    p.add_argument("--approx", required=True)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("descent", help="evaluations to local optimality from random starts")
    _add_instance_options(p)
    p.add_argument("--repetitions", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_descent)

    p = sub.add_parser("sample", help="objective scatter of uniform random schedules")
    _add_instance_options(p)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_BAD_REQUEST
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OutputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_OUTPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_REQUEST


if __name__ == "__main__":
    sys.exit(main())
