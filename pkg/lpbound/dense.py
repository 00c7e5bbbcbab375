# lpbound/dense.py
"""Dense functions on {0,1}^n: one exact value per point, points indexed by bit pattern.

Values are kept as an integer numerator array plus one common denominator.
The array is int64 while the butterfly provably cannot overflow and an object
array of Python ints otherwise, so every result is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .config import get_settings
from .errors import DimensionMismatchError, DimensionTooLargeError, InvalidParameterError
from .radial import LevelProfile, binomial

_INT64_SAFE = 2 ** 62


def _check_dimension(n: int, limit: Optional[int]) -> None:
    limit = get_settings().dense_limit if limit is None else limit
    if n > limit:
        raise DimensionTooLargeError(
            f"dense mode is limited to n <= {limit} (got n={n}); raise LPBOUND_DENSE_LIMIT to go further"
        )


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return max(abs(int(arr.max())), abs(int(arr.min())))


def _as_array(nums: Sequence[int], bound: int) -> np.ndarray:
    if bound < _INT64_SAFE:
        return np.array(nums, dtype=np.int64)
    return np.array(list(nums), dtype=object)


def _widen(arr: np.ndarray, bound: int) -> np.ndarray:
    if arr.dtype == object or bound < _INT64_SAFE:
        return arr
    return arr.astype(object)


@dataclass(frozen=True, eq=False)
class DenseFunction:
    n: int
    numerators: np.ndarray
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidParameterError(f"cube dimension must be non-negative, got {self.n}")
        if len(self.numerators) != 2 ** self.n:
            raise InvalidParameterError(
                f"dense function on n={self.n} needs {2 ** self.n} values, got {len(self.numerators)}"
            )
        if self.denominator <= 0:
            raise InvalidParameterError("denominator must be positive")
        arr = np.array(self.numerators, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "numerators", arr)

    @classmethod
    def from_values(cls, n: int, values: Iterable) -> "DenseFunction":
        vals = [Fraction(v) for v in values]
        den = 1
        for v in vals:
            den = math.lcm(den, v.denominator)
        nums = [v.numerator * (den // v.denominator) for v in vals]
        bound = max((abs(a) for a in nums), default=0)
        return cls(n, _as_array(nums, bound), den)

    def __getitem__(self, x: int) -> Fraction:
        return Fraction(int(self.numerators[x]), self.denominator)

    def __len__(self) -> int:
        return len(self.numerators)

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(int(a), self.denominator) for a in self.numerators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseFunction):
            return NotImplemented
        if self.n != other.n:
            return False
        left = self.numerators.astype(object) * other.denominator
        right = other.numerators.astype(object) * self.denominator
        return bool(np.array_equal(left, right))

    def __hash__(self) -> int:
        return hash((self.n, self.values))

    def scale(self, c) -> "DenseFunction":
        c = Fraction(c)
        nums = self.numerators.astype(object) * c.numerator
        den = self.denominator * c.denominator
        if c.numerator < 0:
            nums, den = -nums, -den
        return DenseFunction(self.n, _narrow(nums), abs(den))

    def total(self) -> Fraction:
        return Fraction(int(self.numerators.astype(object).sum()), self.denominator)

    def dot(self, other: "DenseFunction") -> Fraction:
        """sum_x f(x) g(x), exact."""
        _same_n(self, other)
        acc = (self.numerators.astype(object) * other.numerators.astype(object)).sum()
        return Fraction(int(acc), self.denominator * other.denominator)


def _narrow(arr: np.ndarray) -> np.ndarray:
    if arr.dtype != object:
        return arr
    if _max_abs(arr) < _INT64_SAFE:
        return arr.astype(np.int64)
    return arr


def _same_n(f: DenseFunction, g: DenseFunction) -> None:
    if f.n != g.n:
        raise DimensionMismatchError(f"functions live on different cubes (n={f.n} vs n={g.n})")


def _butterfly(arr: np.ndarray, n: int) -> np.ndarray:
    # stage i combines the pairs of points that differ in bit i
    a = np.array(arr, copy=True)
    for i in range(n):
        a = a.reshape(-1, 2, 2 ** i)
        lo = a[:, 0, :]
        hi = a[:, 1, :]
        a = np.stack((lo + hi, lo - hi), axis=1)
    return a.reshape(-1)


def hamming_weights(n: int) -> np.ndarray:
    idx = np.arange(2 ** n, dtype=np.int64)
    weights = np.zeros(2 ** n, dtype=np.int64)
    for i in range(n):
        weights += (idx >> i) & 1
    return weights


def indicator(n: int, points: Iterable[int]) -> DenseFunction:
    arr = np.zeros(2 ** n, dtype=np.int64)
    for x in points:
        arr[x] = 1
    return DenseFunction(n, arr, 1)


def dense_transform(f: DenseFunction, limit: Optional[int] = None) -> DenseFunction:
    """Unnormalized transform F[f](x) = sum_y (-1)^<x,y> f(y) by the fast butterfly."""
    _check_dimension(f.n, limit)
    arr = _widen(f.numerators, _max_abs(f.numerators) * 2 ** f.n)
    return DenseFunction(f.n, _butterfly(arr, f.n), f.denominator)


def dense_convolve(f: DenseFunction, g: DenseFunction, limit: Optional[int] = None) -> DenseFunction:
    """Normalized convolution (f*g)(x) = 2^-n sum_y f(y) g(x+y).

    Computed as 2^-2n F[F[f] F[g]], which is exact.
    """
    _same_n(f, g)
    _check_dimension(f.n, limit)
    n = f.n
    ff = dense_transform(f, limit)
    fg = dense_transform(g, limit)
    bound = _max_abs(ff.numerators) * _max_abs(fg.numerators) * 2 ** n
    prod = _widen(ff.numerators, bound) * _widen(fg.numerators, bound)
    out = _butterfly(prod, n)
    return DenseFunction(n, out, f.denominator * g.denominator * 4 ** n)


def expand(profile: LevelProfile) -> DenseFunction:
    """The dense function x -> profile[|x|]."""
    _check_dimension(profile.n, None)
    den = 1
    for v in profile.values:
        den = math.lcm(den, v.denominator)
    nums = [v.numerator * (den // v.denominator) for v in profile.values]
    levels = _as_array(nums, max(abs(a) for a in nums))
    return DenseFunction(profile.n, levels[hamming_weights(profile.n)], den)


def radialize(f: DenseFunction) -> LevelProfile:
    """Average of f over each level; equals f's profile when f is radial."""
    weights = hamming_weights(f.n)
    nums = f.numerators.astype(object)
    values = []
    for k in range(f.n + 1):
        level_sum = int(nums[weights == k].sum())
        values.append(Fraction(level_sum, binomial(f.n, k) * f.denominator))
    return LevelProfile(f.n, tuple(values))
