"""Search procedures over the flow shop objective space.

pils_run: iterated local search toward the Pareto front. From the
current solution the three neighborhoods are evaluated in full, one
family at a time in a shuffled order; every neighbor is offered to the
archive, and the first neighbor (canonical order) strictly dominating
the incumbent becomes the new incumbent, resetting the family index and
reshuffling the order. When no family yields a dominating neighbor the
incumbent is locally optimal and gets flagged as investigated; search
then continues from a random unflagged archive member, or, when none
exists, from a perturbed copy of a random member. Runs until the
evaluation budget is spent; a neighborhood batch cut off by the budget
is abandoned.

mos_run: a simpler archive-driven baseline. Repeatedly pick a random
unflagged archive member, evaluate one randomly chosen neighborhood of
it in full, offer everything to the archive, and flag the member if it
survived. When every member is flagged, restart from a fresh random
permutation while keeping the archive.

Both solvers draw all randomness from one per-run random.Random(seed)
and share the initialization path, so equal seeds mean equal first
solutions. All evaluation passes through a counted Evaluator, and
evaluations_used never exceeds the budget.
"""

from dataclasses import dataclass
from random import Random

import numpy as np

from .archive import ParetoArchive, parse_front, render_front
from .neighborhoods import MOVES, neighbor_indices, perturb, shuffle_order
from .problem import Evaluator, Instance, random_permutation


@dataclass
class SolverConfig:
    """Run parameters shared by both solvers.

    record_trace additionally stores per-descent evaluation counts, the
    objective trajectory of the first descent, and the locally optimal
    points declared along the run.
    """

    budget: int
    seed: int
    record_trace: bool = False

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be at least 1")


@dataclass
class RunResult:
    """Outcome of one solver run.

    front holds (perm, objective) pairs sorted by objective vector then
    permutation. trajectory and local_optima are populated only under
    record_trace and are not part of the serialized record.
    """

    algorithm: str
    instance: str
    seed: int
    budget: int
    evaluations_used: int
    front: tuple
    descent_lengths: tuple = ()
    trajectory: tuple | None = None
    local_optima: tuple | None = None


def _front_snapshot(arch: ParetoArchive) -> tuple:
    return tuple(sorted(arch.snapshot(), key=lambda pair: (pair[1], pair[0])))


def _offer_batch(arch, rows, cmaxes, tsums):
    for r in range(len(cmaxes)):
        arch.update(rows[r], (cmaxes[r], tsums[r]))


def _descend(n, x, obj, order, arch, ev, rng, trace=None):
    """Drive x to local optimality w.r.t. all families in order.

    Evaluates whole neighborhoods; offers every evaluated neighbor to
    arch (when given); moves to the first neighbor in canonical order
    that strictly dominates the incumbent, restarting the family stack
    with a freshly shuffled order. Returns (x, obj, consumed, completed)
    where consumed counts neighbor evaluations in this descent and
    completed is False when the budget cut a batch short (the partial
    batch is still archived, the descent abandoned).
    """
    if trace is not None:
        trace.append(obj)
    consumed = 0
    i = 0
    k = len(order)
    x_arr = np.array(x, dtype=np.int64)
    while i < k:
        idx = neighbor_indices(order[i], n)
        room = ev.remaining
        if room is not None and room < idx.shape[0]:
            if room > 0:
                batch = x_arr[idx[:room]]
                cs, ts = ev.evaluate_many(batch)
                if arch is not None:
                    _offer_batch(arch, batch.tolist(), cs, ts)
            return x, obj, consumed, False
        batch = x_arr[idx]
        cs, ts = ev.evaluate_many(batch)
        consumed += len(cs)
        xc, xt = obj
        move_to = -1
        if arch is not None:
            rows = batch.tolist()
            for r in range(len(cs)):
                c = cs[r]
                t = ts[r]
                arch.update(rows[r], (c, t))
                if move_to < 0 and c <= xc and t <= xt and (c < xc or t < xt):
                    move_to = r
        else:
            for r in range(len(cs)):
                c = cs[r]
                t = ts[r]
                if c <= xc and t <= xt and (c < xc or t < xt):
                    move_to = r
                    break
        if move_to >= 0:
            x = tuple(batch[move_to].tolist())
            obj = (cs[move_to], ts[move_to])
            x_arr = np.array(x, dtype=np.int64)
            i = 0
            order[:] = shuffle_order(rng)
            if trace is not None:
                trace.append(obj)
        else:
            i += 1
    return x, obj, consumed, True


def pils_run(instance: Instance, config: SolverConfig) -> RunResult:
    """Pareto iterated local search under an evaluation budget."""
    rng = Random(config.seed)
    ev = Evaluator(instance, budget=config.budget)
    arch = ParetoArchive()
    x = random_permutation(rng, instance.n)
    obj = ev.evaluate(x)
    arch.update(x, obj)
    lengths = []
    local_opts = []
    trajectory = None
    n = instance.n
    if n >= 2:
        order = list(MOVES)
        first_descent = True
        while True:
            trace = [] if (config.record_trace and first_descent) else None
            first_descent = False
            x, obj, consumed, completed = _descend(n, x, obj, order, arch, ev, rng, trace)
            if trace is not None:
                trajectory = tuple(trace)
            if not completed:
                break
            if config.record_trace:
                lengths.append(consumed)
                local_opts.append((x, obj))
            arch.mark_investigated(x)
            if ev.remaining == 0:
                break
            entry = arch.select_uninvestigated(rng)
            if entry is not None:
                x, obj = entry.perm, entry.obj
            else:
                x = perturb(arch.select_any(rng).perm, rng)
                obj = ev.evaluate(x)
                arch.update(x, obj)
    return RunResult(
        algorithm="pils",
        instance=instance.name,
        seed=config.seed,
        budget=config.budget,
        evaluations_used=ev.count,
        front=_front_snapshot(arch),
        descent_lengths=tuple(lengths),
        trajectory=trajectory,
        local_optima=tuple(local_opts) if config.record_trace else None,
    )


def mos_run(instance: Instance, config: SolverConfig) -> RunResult:
    """Archive-driven one-neighborhood baseline under the same budget."""
    rng = Random(config.seed)
    ev = Evaluator(instance, budget=config.budget)
    arch = ParetoArchive()
    x = random_permutation(rng, instance.n)
    obj = ev.evaluate(x)
    arch.update(x, obj)
    n = instance.n
    if n >= 2:
        while ev.remaining > 0:
            entry = arch.select_uninvestigated(rng)
            if entry is None:
                # everything investigated: restart, archive kept
                x = random_permutation(rng, n)
                obj = ev.evaluate(x)
                arch.update(x, obj)
                continue
            kind = MOVES[rng.randrange(len(MOVES))]
            idx = neighbor_indices(kind, n)
            x_arr = np.array(entry.perm, dtype=np.int64)
            room = ev.remaining
            if room < idx.shape[0]:
                batch = x_arr[idx[:room]]
                cs, ts = ev.evaluate_many(batch)
                _offer_batch(arch, batch.tolist(), cs, ts)
                break
            batch = x_arr[idx]
            cs, ts = ev.evaluate_many(batch)
            _offer_batch(arch, batch.tolist(), cs, ts)
            if arch.holds(entry):
                entry.investigated = True
    return RunResult(
        algorithm="mos",
        instance=instance.name,
        seed=config.seed,
        budget=config.budget,
        evaluations_used=ev.count,
        front=_front_snapshot(arch),
    )


def random_sample(instance: Instance, count: int, seed: int) -> list:
    """Objective vectors of count uniformly random permutations."""
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = Random(seed)
    ev = Evaluator(instance)
    out = []
    pending = []
    for _ in range(count):
        pending.append(random_permutation(rng, instance.n))
        if len(pending) == 4096:
            cs, ts = ev.evaluate_many(np.array(pending, dtype=np.int64))
            out.extend(zip(cs, ts))
            pending = []
    if pending:
        cs, ts = ev.evaluate_many(np.array(pending, dtype=np.int64))
        out.extend(zip(cs, ts))
    return out


def descent_stats(instance: Instance, repetitions: int, seed: int) -> list:
    """Evaluations consumed per descent to local optimality.

    Each repetition starts a fresh random permutation and runs the
    intensification loop alone (no budget, no archive bookkeeping);
    the count covers neighbor evaluations until every family fails to
    dominate the incumbent.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    rng = Random(seed)
    ev = Evaluator(instance)
    counts = []
    for _ in range(repetitions):
        x = random_permutation(rng, instance.n)
        obj = ev.evaluate(x)
        order = list(MOVES)
        _, _, consumed, completed = _descend(instance.n, x, obj, order, None, ev, rng)
        assert completed
        counts.append(consumed)
    return counts


def render_run_result(result: RunResult) -> str:
    """Serialize a run: header key/value lines, then the front block."""
    lengths = " ".join(str(v) for v in result.descent_lengths)
    lines = [
        f"instance {result.instance}",
        f"algorithm {result.algorithm}",
        f"seed {result.seed}",
        f"budget {result.budget}",
        f"evaluations_used {result.evaluations_used}",
        ("descent_lengths " + lengths).rstrip(),
        f"front {len(result.front)}",
    ]
    return "\n".join(lines) + "\n" + render_front(result.front)


def parse_run_result(text: str) -> RunResult:
    """Inverse of render_run_result (trace fields are not persisted)."""
    lines = text.splitlines()
    if len(lines) < 7:
        raise ValueError("run record too short")

    def field(idx, key):
        head, _, value = lines[idx].partition(" ")
        if head != key:
            raise ValueError(f"expected {key!r} on line {idx + 1}, got {lines[idx]!r}")
        return value

    instance = field(0, "instance")
    algorithm = field(1, "algorithm")
    seed = int(field(2, "seed"))
    budget = int(field(3, "budget"))
    used = int(field(4, "evaluations_used"))
    lengths = tuple(int(v) for v in field(5, "descent_lengths").split())
    size = int(field(6, "front"))
    pairs = parse_front("\n".join(lines[7:]))
    if len(pairs) != size:
        raise ValueError(f"front block holds {len(pairs)} lines, header says {size}")
    return RunResult(
        algorithm=algorithm,
        instance=instance,
        seed=seed,
        budget=budget,
        evaluations_used=used,
        front=tuple(pairs),
        descent_lengths=lengths,
    )
