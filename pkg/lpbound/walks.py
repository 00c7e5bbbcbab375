"""Counting walks between levels of the Hamming cube.

A vertex at level k has n-k neighbours at level k+1 and k neighbours at level
k-1, and the cube's symmetry group acts transitively on each level. So the
number of length-m walks from a fixed weight-r vertex that end at level l does
not depend on which weight-r vertex we start from, and the level dynamic
program

    c0 = e_r,   c_{t+1}[l] = (n-l+1) c_t[l-1] + (l+1) c_t[l+1]

gives those counts exactly: c_t[l] is the number of length-t walks from the
start vertex that currently sit at some vertex of level l.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

import numpy as np

from .errors import DimensionTooLargeError, InvalidParameterError


@dataclass(frozen=True)
class WalkCountTable:
    n: int
    r: int
    m: int
    counts: Tuple[int, ...]

    def __getitem__(self, level: int) -> int:
        if level < 0 or level > self.n:
            return 0
        return self.counts[level]

    def total(self) -> int:
        return sum(self.counts)


def _check(n: int, r: int, m: int) -> None:
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if not 0 <= r <= n:
        raise InvalidParameterError(f"start level r must satisfy 0 <= r <= n, got r={r}, n={n}")
    if m < 0:
        raise InvalidParameterError(f"walk length must be non-negative, got m={m}")


def iter_walk_counts(n: int, r: int, m: int) -> Iterator[WalkCountTable]:
    """walk_counts(n, r, t) for t = 0..m, sharing one pass of the level recurrence."""
    _check(n, r, m)
    cur: List[int] = [0] * (n + 1)
    cur[r] = 1
    lo = hi = r
    yield WalkCountTable(n, r, 0, tuple(cur))
    for t in range(1, m + 1):
        nxt = [0] * (n + 1)
        lo, hi = max(0, lo - 1), min(n, hi + 1)
        for level in range(lo, hi + 1):
            acc = 0
            if level > 0:
                acc += (n - level + 1) * cur[level - 1]
            if level < n:
                acc += (level + 1) * cur[level + 1]
            nxt[level] = acc
        cur = nxt
        yield WalkCountTable(n, r, t, tuple(cur))


def walk_counts(n: int, r: int, m: int) -> WalkCountTable:
    table = None
    for table in iter_walk_counts(n, r, m):
        pass
    return table


def walk_count(n: int, r: int, m: int, j: int) -> int:
    """P_{r,m,j}: length-m walks from a fixed weight-r vertex ending at weight r+j."""
    if not 0 <= r + j <= n:
        return 0
    return walk_counts(n, r, m).counts[r + j]


def asymptotic_walk_estimate(n: int, r: int, m: int, j: int) -> float:
    """Main term 2 sqrt(r(n-r)) of P_{r,m,j}^(1/m); m and j only enter the o(n) error."""
    if not 0 < r < n:
        raise InvalidParameterError(f"the estimate needs 0 < r < n, got r={r}, n={n}")
    return 2.0 * math.sqrt(r * (n - r))


def log2_int(x: int) -> float:
    """log2 of a positive integer of any size."""
    if x <= 0:
        raise InvalidParameterError(f"log2 needs a positive integer, got {x}")
    bits = x.bit_length()
    if bits <= 1000:
        return math.log2(x)
    shift = bits - 64
    return math.log2(x >> shift) + shift


def log2_fraction(q: Fraction) -> float:
    q = Fraction(q)
    return log2_int(q.numerator) - log2_int(q.denominator)


def walk_root(count: int, m: int) -> float:
    """count^(1/m) in floating point, without overflowing on huge counts."""
    if count == 0:
        return 0.0
    return 2.0 ** (log2_int(count) / m)


def adjacency_power_counts(n: int, r: int, m: int) -> Tuple[int, ...]:
    """Same counts as walk_counts, from the m-th power of the explicit 2^n x 2^n adjacency matrix.

    Starts from the vertex whose lowest r bits are set. Test oracle only.
    """
    _check(n, r, m)
    if n > 10:
        raise DimensionTooLargeError(f"explicit adjacency oracle is limited to n <= 10, got {n}")
    size = 2 ** n
    dtype = np.int64 if n ** m < 2 ** 62 else object
    idx = np.arange(size)
    adj = np.zeros((size, size), dtype=dtype)
    for i in range(n):
        adj[idx, idx ^ (1 << i)] = 1
    row = np.zeros(size, dtype=dtype)
    row[(1 << r) - 1] = 1
    for _ in range(m):
        row = row.dot(adj)
    weights = np.array([bin(x).count("1") for x in range(size)])
    return tuple(int(row[weights == level].sum()) for level in range(n + 1))
