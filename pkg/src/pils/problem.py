"""Permutation flow shop model: instances, schedules, objectives.

n jobs run through m machines in the same order on every machine
(machine 0 first, machine m-1 last). A solution is a permutation of
the job set; the schedule is semi-active, i.e. every operation starts
as early as possible. Two objectives are minimized: makespan (latest
completion) and total tardiness against per-job due dates.

All processing times, due dates and objective values are exact
integers. Jobs are 0-based everywhere, including file formats.
"""

from dataclasses import dataclass, field
from random import Random

import numpy as np


class ParseError(ValueError):
    """Raised for malformed instance or due-date text, with a line number."""


@dataclass(frozen=True)
class Instance:
    """A flow shop instance.

    Attributes:
        n: number of jobs.
        m: number of machines.
        p: processing times, n rows of m integers (p[job][machine]).
        d: due dates, one integer per job.
        name: label carried into output files.
    """

    n: int
    m: int
    p: tuple
    d: tuple
    name: str = "instance"

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("need at least one job and one machine")
        p = tuple(tuple(int(v) for v in row) for row in self.p)
        d = tuple(int(v) for v in self.d)
        if len(p) != self.n or any(len(row) != self.m for row in p):
            raise ValueError(f"processing-time matrix must be {self.n}x{self.m}")
        if any(v < 0 for row in p for v in row):
            raise ValueError("processing times must be non-negative")
        if len(d) != self.n:
            raise ValueError(f"need {self.n} due dates, got {len(d)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "d", d)


def is_permutation(seq, n):
    """True iff seq visits each job 0..n-1 exactly once."""
    return len(seq) == n and sorted(seq) == list(range(n))


def random_permutation(rng: Random, n: int) -> tuple:
    """Uniformly random job permutation drawn from rng."""
    seq = list(range(n))
    rng.shuffle(seq)
    return tuple(seq)


def completion_matrix(instance: Instance, perm) -> list:
    """Completion times of the semi-active schedule for perm.

    Returns an n x m list of lists where entry [pos][k] is the completion
    time of the job in sequence position pos on machine k:

        C[pos][k] = max(C[pos-1][k], C[pos][k-1]) + p[perm[pos]][k]

    with out-of-range terms read as 0.
    """
    if not is_permutation(perm, instance.n):
        raise ValueError("perm is not a permutation of the job set")
    m = instance.m
    p = instance.p
    comp = []
    prev = [0] * m
    for job in perm:
        row = p[job]
        cur = [0] * m
        c = 0
        for k in range(m):
            c = max(prev[k], c) + row[k]
            cur[k] = c
        comp.append(cur)
        prev = cur
    return comp


def evaluate_objectives(instance: Instance, perm) -> tuple:
    """Objective vector (makespan, total tardiness) of perm, exact integers.

    This is the scalar reference path; Evaluator carries the counted and
    vectorized variants and must agree with it exactly.
    """
    if not is_permutation(perm, instance.n):
        raise ValueError("perm is not a permutation of the job set")
    m = instance.m
    p = instance.p
    d = instance.d
    last = m - 1
    prev = [0] * m
    tardiness = 0
    for job in perm:
        row = p[job]
        c = 0
        for k in range(m):
            c = max(prev[k], c) + row[k]
            prev[k] = c
        late = prev[last] - d[job]
        if late > 0:
            tardiness += late
    # completion on the last machine is nondecreasing in sequence position,
    # so the final job's completion is the makespan
    return prev[last], tardiness


class BudgetExceeded(RuntimeError):
    """Internal guard: more evaluations requested than the budget allows."""


class Evaluator:
    """Counted objective evaluation for one run.

    The evaluation counter is per-run state: every permutation scored,
    one increment. An optional budget turns over-consumption into an
    error so callers must trim their batches first.
    """

    def __init__(self, instance: Instance, budget: int | None = None):
        if budget is not None and budget < 1:
            raise ValueError("budget must be at least 1")
        self.instance = instance
        self.budget = budget
        self.count = 0
        self._p = np.array(instance.p, dtype=np.int64).reshape(instance.n, instance.m)
        self._d = np.array(instance.d, dtype=np.int64)

    @property
    def remaining(self) -> int | None:
        """Evaluations left under the budget, or None when unbounded."""
        if self.budget is None:
            return None
        return self.budget - self.count

    def _charge(self, amount: int):
        if self.budget is not None and self.count + amount > self.budget:
            raise BudgetExceeded(f"{self.count}+{amount} exceeds budget {self.budget}")
        self.count += amount

    def evaluate(self, perm) -> tuple:
        """Score one permutation; counts exactly 1 evaluation."""
        self._charge(1)
        return evaluate_objectives(self.instance, perm)

    def evaluate_many(self, perms: np.ndarray):
        """Score a batch of permutations (rows); counts one evaluation each.

        Returns (makespans, tardiness) as lists of Python ints, in row order.
        """
        batch = np.ascontiguousarray(perms, dtype=np.int64)
        if batch.ndim != 2 or batch.shape[1] != self.instance.n:
            raise ValueError("expected a batch of job permutations as rows")
        self._charge(batch.shape[0])
        cmax, tsum = _batch_objectives(self._p, self._d, batch)
        return cmax.tolist(), tsum.tolist()


def _batch_objectives(p_mat, d_vec, perms):
    # vectorized over the batch axis; the recurrence itself stays sequential
    size, n = perms.shape
    m = p_mat.shape[1]
    comp = np.zeros((m, size), dtype=np.int64)
    tsum = np.zeros(size, dtype=np.int64)
    cols = np.ascontiguousarray(perms.T)
    last = m - 1
    for pos in range(n):
        jobs = cols[pos]
        block = p_mat[jobs]
        comp[0] += block[:, 0]
        for k in range(1, m):
            np.maximum(comp[k], comp[k - 1], out=comp[k])
            comp[k] += block[:, k]
        late = comp[last] - d_vec[jobs]
        np.maximum(late, 0, out=late)
        tsum += late
    return comp[last].copy(), tsum


def parse_taillard(text: str, name: str = "instance") -> Instance:
    """Parse flow shop processing times in the standard benchmark layout.

    Expected content: a header line with the job count n and machine
    count m (extra header numbers such as seeds or bounds are ignored),
    followed by the m x n processing-time matrix, one row per machine,
    read job-major after transposition. Lines containing letters are
    treated as decoration and skipped, so the textual banners found in
    distribution files are tolerated. Only the first instance in the
    text is parsed. Due dates are initialized to zero.

    Raises ParseError (with a 1-based line number) on non-numeric
    tokens, a short header, bad counts, negative entries or a truncated
    matrix.
    """
    numeric_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or any(ch.isalpha() for ch in line):
            continue
        vals = []
        for tok in line.split():
            try:
                vals.append(int(tok))
            except ValueError:
                raise ParseError(f"line {lineno}: non-numeric token {tok!r}") from None
        numeric_lines.append((lineno, vals))
    if not numeric_lines:
        raise ParseError("line 1: no numeric content found")
    header_line, header = numeric_lines[0]
    if len(header) < 2:
        raise ParseError(f"line {header_line}: header must hold job and machine counts")
    n, m = header[0], header[1]
    if n < 1 or m < 1:
        raise ParseError(f"line {header_line}: job and machine counts must be positive")
    flat = []
    need = n * m
    last_line = header_line
    for lineno, vals in numeric_lines[1:]:
        for v in vals:
            if len(flat) == need:
                break
            if v < 0:
                raise ParseError(f"line {lineno}: negative processing time {v}")
            flat.append(v)
            last_line = lineno
        if len(flat) == need:
            break
    if len(flat) < need:
        raise ParseError(
            f"line {last_line}: matrix truncated, expected {need} processing times, found {len(flat)}"
        )
    p = tuple(tuple(flat[k * n + j] for k in range(m)) for j in range(n))
    return Instance(n=n, m=m, p=p, d=(0,) * n, name=name)


def parse_due_dates(text: str, n: int) -> tuple:
    """Parse n whitespace-separated integer due dates, job order."""
    vals = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        for tok in raw.split():
            try:
                vals.append(int(tok))
            except ValueError:
                raise ParseError(f"line {lineno}: non-numeric due date {tok!r}") from None
    if len(vals) != n:
        raise ParseError(f"expected {n} due dates, found {len(vals)}")
    return tuple(vals)


def assign_due_dates(instance: Instance, due_dates=None, tau: float | None = None) -> Instance:
    """Return a copy of instance with due dates attached.

    Exactly one source must be given: an explicit sequence of n integers,
    or a tightness factor tau > 0. The generator sets
    d[j] = round(tau * completion of job j under the identity permutation);
    the intended tightness range is 0 < tau <= 1 (smaller is tighter).
    """
    if (due_dates is None) == (tau is None):
        raise ValueError("give exactly one of due_dates or tau")
    if due_dates is not None:
        d = tuple(int(v) for v in due_dates)
        if len(d) != instance.n:
            raise ValueError(f"expected {instance.n} due dates, got {len(d)}")
    else:
        if tau <= 0:
            raise ValueError("tau must be positive")
        comp = completion_matrix(instance, tuple(range(instance.n)))
        last = instance.m - 1
        d = tuple(int(round(tau * comp[j][last])) for j in range(instance.n))
    return Instance(n=instance.n, m=instance.m, p=instance.p, d=d, name=instance.name)


def random_instance(
    n: int,
    m: int,
    seed: int,
    p_max: int = 99,
    tau: float | None = None,
    name: str | None = None,
) -> Instance:
    """Random instance with integer processing times in [1, p_max].

    Due dates are all zero unless a tightness tau is given.
    """
    rng = Random(seed)
    p = tuple(tuple(rng.randint(1, p_max) for _ in range(m)) for _ in range(n))
    if name is None:
        name = f"rand-n{n}-m{m}-s{seed}"
    inst = Instance(n=n, m=m, p=p, d=(0,) * n, name=name)
    if tau is not None:
        inst = assign_due_dates(inst, tau=tau)
    return inst


def load_instance(path, name: str | None = None, due_dates_path=None, tau: float | None = None) -> Instance:
    """Read an instance file, optionally attaching due dates.

    The instance name defaults to the file's base name without suffix.
    """
    from pathlib import Path

    path = Path(path)
    if name is None:
        name = path.stem
    inst = parse_taillard(path.read_text(), name=name)
    if due_dates_path is not None and tau is not None:
        raise ValueError("give at most one of due_dates_path or tau")
    if due_dates_path is not None:
        d = parse_due_dates(Path(due_dates_path).read_text(), inst.n)
        inst = assign_due_dates(inst, due_dates=d)
    elif tau is not None:
        inst = assign_due_dates(inst, tau=tau)
    return inst
