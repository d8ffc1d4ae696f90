"""Descent-length growth study.

Measures the mean number of evaluations a single neighborhood descent
needs to reach local optimality, across growing job counts. The count
grows steeply with n, which is exactly why fixed evaluation budgets
favor different search styles at different scales.

Usage: python scripts/descent_growth.py [--sizes 20 50 100] [--repetitions 100]
"""

import argparse
import math
import sys
import time

from pils import descent_stats, random_instance


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 50, 100])
    ap.add_argument("--machines", type=int, default=5)
    ap.add_argument("--repetitions", type=int, default=100)
    ap.add_argument("--cap-at-hundred", type=int, default=20,
                    help="repetition bound for n >= 100 (those descents run minutes)")
    ap.add_argument("--tau", type=float, default=0.6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    print(f"{'n':>4} {'reps':>5} {'mean evals':>12} {'min':>10} {'max':>10} {'secs':>7}")
    for i, n in enumerate(args.sizes):
        reps = args.repetitions if n < 100 else min(args.repetitions, args.cap_at_hundred)
        inst = random_instance(n, args.machines, seed=400 + i, tau=args.tau)
        t0 = time.perf_counter()
        counts = descent_stats(inst, reps, seed=args.seed)
        elapsed = time.perf_counter() - t0
        mean = math.fsum(counts) / len(counts)
        print(f"{n:>4} {reps:>5} {mean:>12.1f} {min(counts):>10} {max(counts):>10} {elapsed:>7.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
