"""Desk-scale exactness check against full enumeration.

On instances small enough to enumerate (n <= 10), compares the PILS
front after a fixed budget with the exact Pareto front and reports how
often the solver recovers it completely.

Usage: python scripts/exact_small.py [--jobs 8] [--budget 200000] [--seeds 10]
"""

import argparse
import sys

from pils import SolverConfig, brute_force_pareto, d_metrics, pils_run, random_instance


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=8)
    ap.add_argument("--machines", type=int, default=5)
    ap.add_argument("--instances", type=int, default=5)
    ap.add_argument("--budget", type=int, default=200_000)
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--tau", type=float, default=0.6)
    args = ap.parse_args(argv)

    exact_runs = total = 0
    for k in range(args.instances):
        inst = random_instance(args.jobs, args.machines, seed=300 + k, tau=args.tau)
        reference = sorted(vec for vec, _ in brute_force_pareto(inst))
        hits = 0
        for seed in range(args.seeds):
            res = pils_run(inst, SolverConfig(budget=args.budget, seed=seed))
            rep = d_metrics(reference, sorted({obj for _, obj in res.front}))
            hits += rep.d1 == 0.0 and rep.d2 == 0.0
        total += args.seeds
        exact_runs += hits
        print(f"instance seed {300 + k}: exact front in {hits}/{args.seeds} runs "
              f"({len(reference)} optimal vectors)")
    print(f"overall: {exact_runs}/{total} runs exact")
    return 0


if __name__ == "__main__":
    sys.exit(main())
