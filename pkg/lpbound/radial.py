"""Exact radial (level-symmetric) functions on the Hamming cube {0,1}^n.

Convention: every transform stored here is UNNORMALIZED,

    F[f](x) = sum_y (-1)^<x,y> f(y),

so F = 2^n * f_hat for the normalized hat f_hat(x) = 2^-n sum_y (-1)^<x,y> f(y).
F applied twice is 2^n times the identity. The unnormalized transform of the
level-j indicator L_j is the Krawtchouk polynomial k -> K_j(k).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple, Union

from .errors import DimensionMismatchError, EntropyDomainError, InvalidParameterError

Rational = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class LevelProfile:
    """A radial function x -> values[|x|], stored as n+1 exact rationals."""

    n: int
    values: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError(f"cube dimension must be positive, got {self.n}")
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.n + 1:
            raise InvalidParameterError(
                f"profile for n={self.n} needs {self.n + 1} values, got {len(vals)}"
            )
        object.__setattr__(self, "values", vals)

    @classmethod
    def unit(cls, n: int, j: int) -> "LevelProfile":
        """Profile of the level indicator L_j (e_j)."""
        return cls(n, tuple(1 if k == j else 0 for k in range(n + 1)))

    @classmethod
    def ones(cls, n: int) -> "LevelProfile":
        return cls(n, (1,) * (n + 1))

    @classmethod
    def zeros(cls, n: int) -> "LevelProfile":
        return cls(n, (0,) * (n + 1))

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __add__(self, other: "LevelProfile") -> "LevelProfile":
        _same_n(self, other)
        return LevelProfile(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "LevelProfile") -> "LevelProfile":
        _same_n(self, other)
        return LevelProfile(self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, c: Rational) -> "LevelProfile":
        c = Fraction(c)
        return LevelProfile(self.n, tuple(c * v for v in self.values))

    def times(self, other: "LevelProfile") -> "LevelProfile":
        """Pointwise product."""
        _same_n(self, other)
        return LevelProfile(self.n, tuple(a * b for a, b in zip(self.values, other.values)))

    def support(self) -> List[int]:
        return [k for k, v in enumerate(self.values) if v != 0]


def _same_n(a: LevelProfile, b: LevelProfile) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"profiles live on different cubes (n={a.n} vs n={b.n})")


@dataclass(frozen=True)
class KrawtchoukTable:
    """K[j][k] = K_j(k), exact integers, 0 <= j, k <= n."""

    n: int
    K: Tuple[Tuple[int, ...], ...]

    def __call__(self, j: int, k: int) -> int:
        return self.K[j][k]

    def row(self, j: int) -> Tuple[int, ...]:
        return self.K[j]


def krawtchouk_rows(n: int, upto: int) -> List[List[int]]:
    """Rows K_0..K_upto evaluated at every k = 0..n.

    Three-term recurrence (j+1) K_{j+1}(k) = (n-2k) K_j(k) - (n-j+1) K_{j-1}(k);
    the division is always exact.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    upto = min(upto, n)
    rows: List[List[int]] = [[1] * (n + 1)]
    if upto >= 1:
        rows.append([n - 2 * k for k in range(n + 1)])
    for j in range(1, upto):
        prev, cur = rows[j - 1], rows[j]
        rows.append(
            [((n - 2 * k) * cur[k] - (n - j + 1) * prev[k]) // (j + 1) for k in range(n + 1)]
        )
    return rows


@lru_cache(maxsize=16)
def krawtchouk_table(n: int) -> KrawtchoukTable:
    rows = krawtchouk_rows(n, n)
    return KrawtchoukTable(n, tuple(tuple(r) for r in rows))


def _common_denominator(values: Sequence[Fraction]) -> Tuple[List[int], int]:
    den = 1
    for v in values:
        den = math.lcm(den, v.denominator)
    return [v.numerator * (den // v.denominator) for v in values], den


def radial_transform(p: LevelProfile) -> LevelProfile:
    """Unnormalized transform of a radial function: out[i] = sum_k p[k] K_k(i)."""
    table = krawtchouk_table(p.n)
    nums, den = _common_denominator(p.values)
    out = []
    for i in range(p.n + 1):
        acc = 0
        for k, a in enumerate(nums):
            if a:
                acc += a * table.K[k][i]
        out.append(Fraction(acc, den))
    return LevelProfile(p.n, tuple(out))


def inverse_radial_transform(p: LevelProfile) -> LevelProfile:
    """The normalized hat 2^-n F[p]; undoes radial_transform."""
    return radial_transform(p).scale(Fraction(1, 2 ** p.n))


def radial_sum(p: LevelProfile) -> Fraction:
    """sum_x f(x) = sum_k C(n,k) p[k] (= 2^n f_hat(0))."""
    return sum((binomial(p.n, k) * v for k, v in enumerate(p.values)), Fraction(0))


def binary_entropy(p: Union[float, Fraction]) -> float:
    if p < 0 or p > 1:
        raise EntropyDomainError(f"binary entropy is defined on [0, 1], got {p}")
    if p == 0 or p == 1:
        return 0.0
    p = float(p)
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)
