"""The Delsarte linear program for binary codes, in radial form.

Averaging a feasible f over the coordinate permutations (the symmetries of the
cube that fix 0) keeps f(0), the signs of f and of its transform, the zero
band 1 <= |x| <= d-1 and the objective sum_x f(x). So the program has a radial
optimum, and it is enough to solve over profiles a_0..a_n:

    max  sum_k C(n,k) a_k
    s.t. a_0 = 1,  a_1 = ... = a_{d-1} = 0,  a_k >= 0,
         sum_k a_k K_k(i) >= 0   for i = 0..n.

With a_0 fixed the constraints read -sum_{k>=d} a_k K_k(i) <= 1, so the origin is
feasible and the exact simplex in lpbound.simplex applies directly.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .certificates import check_dual_feasible, dual_ratio
from .config import get_settings
from .errors import DimensionMismatchError, DimensionTooLargeError, InfeasibleDualError, InvalidParameterError
from .radial import LevelProfile, binomial, krawtchouk_table, radial_transform
from .simplex import maximize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LPInstance:
    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1 or not 1 <= self.d <= self.n:
            raise InvalidParameterError(f"LP instance needs 1 <= d <= n, got n={self.n}, d={self.d}")


@dataclass(frozen=True)
class LPSolution:
    n: int
    d: int
    value: Fraction
    profile: LevelProfile
    status: str
    duals: Tuple[Fraction, ...] = ()
    pivots: int = 0


def solve_primal(
    inst: LPInstance,
    limit: Optional[int] = None,
    row_order: Optional[Sequence[int]] = None,
) -> LPSolution:
    n, d = inst.n, inst.d
    limit = get_settings().lp_limit if limit is None else limit
    if n > limit:
        raise DimensionTooLargeError(f"the LP solver is limited to n <= {limit} (got n={n})")
    order = list(range(n + 1)) if row_order is None else list(row_order)
    if sorted(order) != list(range(n + 1)):
        raise InvalidParameterError("row_order must be a permutation of 0..n")

    table = krawtchouk_table(n)
    levels = list(range(d, n + 1))
    c = [binomial(n, k) for k in levels]
    A = [[-table.K[k][i] for k in levels] for i in order]
    res = maximize(c, A, [1] * (n + 1))

    values = [Fraction(0)] * (n + 1)
    values[0] = Fraction(1)
    for k, a in zip(levels, res.x):
        values[k] = a
    profile = LevelProfile(n, tuple(values))
    value = 1 + res.value

    duals = [Fraction(0)] * (n + 1)
    for pos, i in enumerate(order):
        duals[i] = res.y[pos]
    if res.status == "optimal" and 1 + sum(duals) != value:
        log.warning("complementary slackness check failed for n=%d d=%d", n, d)
    log.debug("LP n=%d d=%d: value=%s after %d pivots", n, d, value, res.pivots)
    return LPSolution(
        n=n,
        d=d,
        value=value,
        profile=profile,
        status=res.status,
        duals=tuple(duals),
        pivots=res.pivots,
    )


def verify_primal(profile: LevelProfile, inst: LPInstance) -> bool:
    if profile.n != inst.n:
        return False
    if profile[0] != 1:
        return False
    if any(profile[k] != 0 for k in range(1, inst.d)):
        return False
    if any(v < 0 for v in profile):
        return False
    return all(v >= 0 for v in radial_transform(profile))


def dual_value(g: LevelProfile, inst: LPInstance) -> Fraction:
    """g(0)/g_hat(0) for a dual feasible g; an upper bound on the LP optimum."""
    if g.n != inst.n:
        raise DimensionMismatchError(f"dual profile has n={g.n}, instance has n={inst.n}")
    check = check_dual_feasible(g, inst.d)
    if not check:
        raise InfeasibleDualError("; ".join(check.violations))
    return dual_ratio(g)