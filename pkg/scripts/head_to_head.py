"""Head-to-head benchmark: PILS vs MOS vs random sampling.

Runs both solvers over a grid of generated instance classes, scores every
run against the pooled reference front, and prints a per-instance table
plus the win counts. Defaults reproduce the desk-scale comparison; raise
--budget/--runs for longer experiments.

Usage: python scripts/head_to_head.py [--budget 100000] [--runs 10]
"""

import argparse
import math
import sys

from pils import SolverConfig, d_metrics, mos_run, pils_run, pooled_reference, random_instance

# (jobs, machines, instance seed); tau 0.6 throughout
DEFAULT_CLASSES = [
    (20, 5, 201), (20, 5, 202), (20, 5, 203), (20, 5, 204), (20, 5, 205),
    (20, 10, 211), (20, 10, 212), (20, 10, 213), (20, 10, 214),
    (50, 5, 221),
]


def mean(xs):
    return math.fsum(xs) / len(xs)


def run_instance(inst, runs, budget):
    fronts = {"pils": [], "mos": []}
    for seed in range(runs):
        for name, runner in (("pils", pils_run), ("mos", mos_run)):
            res = runner(inst, SolverConfig(budget=budget, seed=seed))
            fronts[name].append([obj for _, obj in res.front])
    reference = pooled_reference(fronts["pils"] + fronts["mos"])
    out = {}
    for name in ("pils", "mos"):
        reports = [d_metrics(reference, front) for front in fronts[name]]
        out[name] = (mean([r.d1 for r in reports]), mean([r.d2 for r in reports]))
    return out, len(reference)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=100_000)
    ap.add_argument("--runs", type=int, default=10)
    ap.add_argument("--tau", type=float, default=0.6)
    args = ap.parse_args(argv)

    print(f"budget {args.budget}, {args.runs} runs per solver, tau {args.tau}")
    print(f"{'instance':<14} {'ref':>4} {'PILS D1':>9} {'MOS D1':>9} {'PILS D2':>9} {'MOS D2':>9}")
    d1_wins = d2_wins = 0
    for n, m, iseed in DEFAULT_CLASSES:
        inst = random_instance(n, m, seed=iseed, tau=args.tau)
        scores, ref_size = run_instance(inst, args.runs, args.budget)
        (p1, p2), (m1, m2) = scores["pils"], scores["mos"]
        d1_wins += p1 <= m1
        d2_wins += p2 <= m2
        label = f"{n}x{m} s{iseed}"
        print(f"{label:<14} {ref_size:>4} {p1:>9.4f} {m1:>9.4f} {p2:>9.4f} {m2:>9.4f}")
    print(f"PILS D1 wins {d1_wins}/{len(DEFAULT_CLASSES)}, D2 wins {d2_wins}/{len(DEFAULT_CLASSES)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
