"""Front quality indicators and the exhaustive small-instance oracle.

A front is a set of objective vectors (duplicates collapse). Quality of
an approximation A against a reference R is summarized by two numbers
built from a weighted one-sided distance

    d(r, a) = max_k w_k * max(0, a_k - r_k)

with w_k = 1 / (range of objective k over R), or 1 when that range is
zero. d1 averages min_a d(r, a) over the reference, d2 takes the worst
case; both are zero exactly when A covers every reference vector.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .problem import Instance, ParseError, _batch_objectives


@dataclass
class MetricReport:
    """Distance-to-reference summary: 0 <= d1 <= d2."""

    d1: float
    d2: float
    reference_size: int
    approx_size: int


def _front(points) -> list:
    vecs = sorted({tuple(p) for p in points})
    if not vecs:
        raise ValueError("front must be non-empty")
    k = len(vecs[0])
    if any(len(v) != k for v in vecs):
        raise ValueError("objective vectors must share one length")
    return vecs


def d_metrics(reference, approx) -> MetricReport:
    """Mean (d1) and maximum (d2) covering distance of approx to reference.

    Weights come from the reference side alone, so the report is
    comparable across approximations of the same reference.
    """
    ref = _front(reference)
    apx = _front(approx)
    if len(ref[0]) != len(apx[0]):
        raise ValueError("fronts must share the objective count")
    k = len(ref[0])
    weights = []
    for idx in range(k):
        vals = [v[idx] for v in ref]
        span = max(vals) - min(vals)
        weights.append(1.0 / span if span > 0 else 1.0)
    nearest = []
    for r in ref:
        best = math.inf
        for a in apx:
            dist = 0.0
            for idx in range(k):
                excess = a[idx] - r[idx]
                if excess > 0:
                    scaled = weights[idx] * excess
                    if scaled > dist:
                        dist = scaled
            if dist < best:
                best = dist
                if best == 0.0:
                    break
        nearest.append(best)
    d2 = max(nearest)
    # float summation can push the mean past the max by an ulp when the
    # minima are all equal; the true mean never exceeds the max
    d1 = min(math.fsum(nearest) / len(nearest), d2)
    return MetricReport(d1=d1, d2=d2, reference_size=len(ref), approx_size=len(apx))


def brute_force_pareto(instance: Instance, max_jobs: int = 10, chunk: int = 40320) -> list:
    """Exact Pareto front by full enumeration of all n! schedules.

    Returns (vector, witness) pairs sorted by makespan, one witness
    permutation per front vector: the lexicographically first one that
    achieves it. Guarded to n <= max_jobs; factorial growth makes
    anything larger unreasonable to enumerate.
    """
    n = instance.n
    if n > max_jobs:
        raise ValueError(f"refusing exhaustive enumeration beyond {max_jobs} jobs (n={n})")
    p = np.array(instance.p, dtype=np.int64).reshape(n, instance.m)
    d = np.array(instance.d, dtype=np.int64)
    best_by_cmax = {}
    perms = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(perms, chunk))
        if not block:
            break
        cs, ts = _batch_objectives(p, d, np.array(block, dtype=np.int64))
        cs = cs.tolist()
        ts = ts.tolist()
        for i in range(len(block)):
            c = cs[i]
            t = ts[i]
            cur = best_by_cmax.get(c)
            if cur is None or t < cur[0]:
                best_by_cmax[c] = (t, block[i])
    front = []
    best_t = math.inf
    for c in sorted(best_by_cmax):
        t, witness = best_by_cmax[c]
        if t < best_t:
            front.append(((c, t), witness))
            best_t = t
    return front


def pooled_reference(fronts) -> list:
    """Non-dominated union of several fronts, as sorted unique vectors."""
    from .archive import ParetoArchive

    arch = ParetoArchive()
    tag = 0
    for front in fronts:
        for vec in front:
            arch.update((tag,), tuple(vec))
            tag += 1
    return sorted(arch.objective_vectors())


def _fmt(v) -> str:
    return repr(v) if isinstance(v, float) else str(v)


def render_front_points(points) -> str:
    """Objective vectors, one per line, whitespace separated, sorted."""
    vecs = sorted(tuple(p) for p in points)
    return "\n".join(" ".join(_fmt(v) for v in vec) for vec in vecs) + ("\n" if vecs else "")


def parse_front_points(text: str) -> list:
    """Parse a front file: one objective vector per line.

    Integer tokens stay ints, anything else parses as float. Raises
    ParseError on malformed tokens, ragged rows or an empty file.
    """
    vecs = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        vals = []
        for tok in raw.split():
            try:
                vals.append(int(tok))
            except ValueError:
                try:
                    vals.append(float(tok))
                except ValueError:
                    raise ParseError(f"line {lineno}: bad objective value {tok!r}") from None
        if width is None:
            width = len(vals)
        elif len(vals) != width:
            raise ParseError(f"line {lineno}: expected {width} values, found {len(vals)}")
        vecs.append(tuple(vals))
    if not vecs:
        raise ParseError("front file holds no points")
    return vecs


def render_metric_report(report: MetricReport) -> str:
    return (
        f"d1 {report.d1!r}\n"
        f"d2 {report.d2!r}\n"
        f"reference_size {report.reference_size}\n"
        f"approx_size {report.approx_size}\n"
    )


def parse_metric_report(text: str) -> MetricReport:
    fields = {}
    for raw in text.splitlines():
        if raw.strip():
            key, _, value = raw.partition(" ")
            fields[key] = value
    try:
        return MetricReport(
            d1=float(fields["d1"]),
            d2=float(fields["d2"]),
            reference_size=int(fields["reference_size"]),
            approx_size=int(fields["approx_size"]),
        )
    except KeyError as missing:
        raise ValueError(f"metric report lacks field {missing}") from None
