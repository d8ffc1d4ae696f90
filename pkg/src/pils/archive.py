"""Unbounded archive of mutually non-dominated solutions.

Each entry pairs a permutation with its objective vector and carries an
"investigated" flag meaning its neighborhoods have been fully explored.
Duplicate objective vectors reached by different permutations are all
kept; an exact duplicate (same permutation, same vector) is rejected.

Entries are held in a plain list and scanned linearly: fronts for two
objectives stay small, so simplicity wins over asymptotics.
"""

from random import Random


def dominates(a, b) -> bool:
    """True iff a is componentwise <= b with at least one strict <.

    Minimization throughout. Equal vectors do not dominate each other.
    """
    if len(a) != len(b):
        raise ValueError("objective vectors must have equal length")
    strict = False
    for x, y in zip(a, b):
        if x > y:
            return False
        if x < y:
            strict = True
    return strict


class ArchiveEntry:
    """One archived solution: permutation, objective vector, investigated flag."""

    __slots__ = ("perm", "obj", "investigated")

    def __init__(self, perm, obj, investigated=False):
        self.perm = perm
        self.obj = obj
        self.investigated = investigated

    def __repr__(self):
        return f"ArchiveEntry(perm={self.perm!r}, obj={self.obj!r}, investigated={self.investigated})"


class ParetoArchive:
    """Streamed non-dominated set with per-entry investigated flags."""

    def __init__(self):
        self.entries = []

    def __len__(self):
        return len(self.entries)

    def update(self, perm, obj) -> bool:
        """Offer a solution; return True iff it was inserted.

        Rejected when some entry dominates obj, or when an entry holds the
        identical permutation and vector. On insertion every entry whose
        vector the new one dominates is dropped, and the new entry starts
        uninvestigated (also after re-entry of a previously dropped vector).
        """
        entries = self.entries
        if len(obj) == 2:
            # unrolled two-objective path; this is the solver hot loop
            c, t = obj
            cand = None
            dropped = None
            for e in entries:
                ec, et = e.obj
                if ec <= c and et <= t:
                    if ec < c or et < t:
                        return False
                    if cand is None:
                        cand = tuple(perm)
                    if e.perm == cand:
                        return False
                elif c <= ec and t <= et:
                    if dropped is None:
                        dropped = []
                    dropped.append(e)
        else:
            cand = None
            dropped = None
            for e in entries:
                if dominates(e.obj, obj):
                    return False
                if e.obj == tuple(obj):
                    if cand is None:
                        cand = tuple(perm)
                    if e.perm == cand:
                        return False
                elif dominates(obj, e.obj):
                    if dropped is None:
                        dropped = []
                    dropped.append(e)
        if dropped:
            gone = set(map(id, dropped))
            self.entries = entries = [e for e in entries if id(e) not in gone]
        if cand is None:
            cand = tuple(perm)
        entries.append(ArchiveEntry(cand, tuple(obj), False))
        return True

    def select_uninvestigated(self, rng: Random):
        """Uniformly random entry whose flag is unset, or None if all are set."""
        open_entries = [e for e in self.entries if not e.investigated]
        if not open_entries:
            return None
        return open_entries[rng.randrange(len(open_entries))]

    def select_any(self, rng: Random):
        """Uniformly random entry; the archive must not be empty."""
        if not self.entries:
            raise ValueError("archive is empty")
        return self.entries[rng.randrange(len(self.entries))]

    def mark_investigated(self, perm) -> bool:
        """Set the flag on the entry holding perm; False if perm is not archived."""
        perm = tuple(perm)
        for e in self.entries:
            if e.perm == perm:
                e.investigated = True
                return True
        return False

    def holds(self, entry) -> bool:
        """True iff this exact entry object is still archived."""
        return any(e is entry for e in self.entries)

    def objective_vectors(self) -> set:
        """The set of distinct archived objective vectors."""
        return {e.obj for e in self.entries}

    def snapshot(self) -> tuple:
        """Immutable (perm, obj) pairs in archive order."""
        return tuple((e.perm, e.obj) for e in self.entries)


def render_front(pairs) -> str:
    """Serialize (perm, obj) pairs, one line per entry.

    Line layout: objective values separated by tabs, then the permutation
    as space-separated 0-based job ids. Sorted by the first objective
    ascending, remaining objectives and the permutation breaking ties.
    """
    rows = sorted((tuple(obj), tuple(perm)) for perm, obj in pairs)
    lines = []
    for obj, perm in rows:
        lines.append("\t".join(str(v) for v in obj) + "\t" + " ".join(str(j) for j in perm))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_front(text: str) -> list:
    """Inverse of render_front: list of (perm, obj) pairs in file order."""
    pairs = []
    for raw in text.splitlines():
        if not raw.strip():
            continue
        cells = raw.split("\t")
        if len(cells) < 2:
            raise ValueError(f"bad front line: {raw!r}")
        obj = tuple(int(v) for v in cells[:-1])
        perm = tuple(int(v) for v in cells[-1].split())
        pairs.append((perm, obj))
    return pairs
