import math
import random
from fractions import Fraction

import pytest

from lpbound.errors import DimensionTooLargeError, InvalidParameterError
from lpbound.walks import (
    adjacency_power_counts,
    asymptotic_walk_estimate,
    iter_walk_counts,
    log2_fraction,
    log2_int,
    walk_count,
    walk_counts,
    walk_root,
)


def test_small_table():
    assert walk_counts(6, 3, 3).counts == (6, 0, 102, 0, 102, 0, 6)
    assert walk_count(10, 5, 3, -1) == 440
    assert walk_count(10, 4, 3, 1) == 528


def test_every_step_of_one_pass():
    tables = list(iter_walk_counts(12, 5, 9))
    assert [t.m for t in tables] == list(range(10))
    assert all(t == walk_counts(12, 5, t.m) for t in tables)
    assert tables[3][4] == walk_count(12, 5, 3, -1)


def test_zero_length_walk():
    table = walk_counts(9, 4, 0)
    assert table[4] == 1
    assert table.total() == 1


def test_out_of_range_levels_are_zero():
    assert walk_count(5, 5, 1, 1) == 0
    assert walk_count(5, 0, 3, -1) == 0
    assert walk_counts(5, 2, 2)[-1] == 0
    assert walk_counts(5, 2, 2)[6] == 0


def test_top_level_steps_down():
    assert walk_count(7, 7, 1, -1) == 7


def test_parity():
    table = walk_counts(12, 5, 7)
    assert all(c == 0 for level, c in enumerate(table.counts) if (level - 5) % 2 == 0)


@pytest.mark.parametrize("n", range(1, 11))
def test_matches_adjacency_powers(n):
    for r in range(n + 1):
        for m in range(7):
            assert walk_counts(n, r, m).counts == adjacency_power_counts(n, r, m)


def test_adjacency_oracle_limit():
    with pytest.raises(DimensionTooLargeError):
        adjacency_power_counts(11, 1, 1)


def test_totals_random():
    rng = random.Random(2024)
    for _ in range(100):
        n, m = rng.randint(1, 200), rng.randint(0, 200)
        r = rng.randint(0, n)
        assert walk_counts(n, r, m).total() == n ** m


@pytest.mark.slow
def test_totals_random_full():
    rng = random.Random(1)
    for _ in range(1000):
        n, m = rng.randint(1, 200), rng.randint(0, 200)
        r = rng.randint(0, n)
        assert walk_counts(n, r, m).total() == n ** m


def test_complement_symmetry():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(2, 40)
        r, m, j = rng.randint(0, n), rng.randint(0, 15), rng.randint(-4, 4)
        assert walk_count(n, r, m, j) == walk_count(n, n - r, m, -j)


def test_invalid_parameters():
    with pytest.raises(InvalidParameterError):
        walk_counts(5, 6, 1)
    with pytest.raises(InvalidParameterError):
        walk_counts(5, 2, -1)
    with pytest.raises(InvalidParameterError):
        asymptotic_walk_estimate(5, 0, 3, 1)


def _odd_length(n: int) -> int:
    return 2 * (math.isqrt(n) // 2) - 1


def _deviation(n: int, j: int) -> float:
    r, m = n // 4, _odd_length(n)
    return abs(walk_root(walk_count(n, r, m, j), m) / asymptotic_walk_estimate(n, r, m, j) - 1)


@pytest.mark.parametrize("j", [-1, 1])
def test_root_approaches_main_term(j):
    assert _odd_length(4000) == 61
    small = _deviation(4000, j)
    assert small <= 0.1
    assert _deviation(8000, j) < small


def test_logs_of_huge_values():
    x = 3 ** 5000
    assert log2_int(x) == pytest.approx(5000 * math.log2(3), rel=1e-12)
    assert log2_fraction(Fraction(1, 2 ** 3000)) == pytest.approx(-3000)
    assert walk_root(0, 3) == 0.0
    assert walk_root(2 ** 30, 3) == pytest.approx(1024)
    with pytest.raises(InvalidParameterError):
        log2_int(0)
