"""Neighborhood moves on job permutations.

Three move families, each producing exactly n*(n-1)/2 distinct
neighbors in a fixed canonical order:

  exchange        swap the jobs at two positions i < j
  forward shift   take the job at position i and reinsert it at j < i,
                  shifting the jobs in between one position later
  backward shift  take the job at position i and reinsert it at j > i,
                  shifting the jobs in between one position earlier

Plus a perturbation step for escaping investigated regions: reverse a
block of four consecutive jobs at a random start (single random
exchange below four jobs).

Neighbor generation is permutation-independent: for each family and n
a source-index matrix is cached, and a neighbor batch is one gather.
"""

from enum import Enum
from functools import lru_cache
from random import Random

import numpy as np


class Move(Enum):
    EXCHANGE = "exchange"
    FORWARD_SHIFT = "forward_shift"
    BACKWARD_SHIFT = "backward_shift"


MOVES = (Move.EXCHANGE, Move.FORWARD_SHIFT, Move.BACKWARD_SHIFT)


@lru_cache(maxsize=None)
def neighbor_indices(kind: Move, n: int) -> np.ndarray:
    """Source-index matrix for one move family, n*(n-1)/2 rows.

    Row r describes neighbor r as a gather: neighbor[col] = perm[row[col]].
    Canonical row order: position pairs in lexicographic order of
    (i, j) for exchange (i < j) and backward shift (j > i), and of
    (i, j) with i ascending then j ascending for forward shift (j < i).
    The returned array is read-only and cached per (kind, n).
    """
    rows = []
    base = list(range(n))
    if kind is Move.EXCHANGE:
        for i in range(n - 1):
            for j in range(i + 1, n):
                src = base.copy()
                src[i], src[j] = j, i
                rows.append(src)
    elif kind is Move.FORWARD_SHIFT:
        for i in range(1, n):
            for j in range(i):
                src = base.copy()
                src[j] = i
                src[j + 1 : i + 1] = range(j, i)
                rows.append(src)
    elif kind is Move.BACKWARD_SHIFT:
        for i in range(n - 1):
            for j in range(i + 1, n):
                src = base.copy()
                src[i:j] = range(i + 1, j + 1)
                src[j] = i
                rows.append(src)
    else:
        raise ValueError(f"unknown move family: {kind!r}")
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    arr.setflags(write=False)
    return arr


def neighbor_batch(kind: Move, perm_array: np.ndarray) -> np.ndarray:
    """All neighbors of one permutation as rows, canonical order."""
    return perm_array[neighbor_indices(kind, perm_array.shape[0])]


def _as_tuples(kind: Move, perm) -> list:
    arr = np.asarray(perm, dtype=np.int64)
    return [tuple(row) for row in neighbor_batch(kind, arr).tolist()]


def exchange_all(perm) -> list:
    """All pairwise-swap neighbors, pairs (i, j) with i < j in lex order."""
    return _as_tuples(Move.EXCHANGE, perm)


def forward_shift_all(perm) -> list:
    """All neighbors moving some job to an earlier position."""
    return _as_tuples(Move.FORWARD_SHIFT, perm)


def backward_shift_all(perm) -> list:
    """All neighbors moving some job to a later position."""
    return _as_tuples(Move.BACKWARD_SHIFT, perm)


def neighbors(kind: Move, perm) -> list:
    """Neighbor list of perm under one move family, canonical order."""
    return _as_tuples(kind, perm)


def reverse_block(perm, start: int, length: int = 4) -> tuple:
    """Reverse length consecutive jobs beginning at start (an involution)."""
    if start < 0 or start + length > len(perm):
        raise ValueError("block does not fit the permutation")
    perm = tuple(perm)
    return perm[:start] + perm[start : start + length][::-1] + perm[start + length :]


def perturb(perm, rng: Random) -> tuple:
    """Perturbed copy of perm: reverse a random block of four consecutive jobs.

    Below four jobs, falls back to one random exchange; a single-job
    permutation is returned unchanged (it has no neighbors at all).
    """
    n = len(perm)
    if n >= 4:
        return reverse_block(perm, rng.randrange(n - 3), 4)
    if n >= 2:
        i, j = rng.sample(range(n), 2)
        seq = list(perm)
        seq[i], seq[j] = seq[j], seq[i]
        return tuple(seq)
    return tuple(perm)


def shuffle_order(rng: Random) -> list:
    """Uniformly random ordering of the three move families."""
    order = list(MOVES)
    rng.shuffle(order)
    return order
