"""Dual certificates g = phi * Gamma^2 for the Delsarte program.

Walk certificate: phi_m(x) = (n-2|x|)^m - (n-2d)^m with m odd, Gamma_hat = L_r + L_{r-1}.
Multiplying by (n-2|x|) on the cube is applying the adjacency matrix A on the
Fourier side, so hat(phi_m Gamma) = (A^m - (n-2d)^m) Gamma_hat, and g is
dual feasible as soon as

    P_{r,m,-1} >= (n-2d)^m + 1   and   P_{r-1,m,1} >= (n-2d)^m + 1,

an exact statement about integers at every finite n.

Profiles: phi, gamma, g are values on levels; gamma_hat is the normalized
hat of gamma, so radial_transform(gamma_hat) == gamma.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import (
    DegenerateCertificateError,
    InvalidParameterError,
    NoFeasibleCertificateError,
)
from .radial import LevelProfile, binomial, krawtchouk_rows, radial_sum, radial_transform
from .walks import iter_walk_counts, walk_counts

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    n: int
    d: int
    m: int
    r: int
    phi: LevelProfile
    gamma_hat: LevelProfile
    gamma: LevelProfile
    g: LevelProfile

    @property
    def trivial_regime(self) -> bool:
        # n - 2d < 0: the threshold (n-2d)^m + 1 is not positive
        return 2 * self.d > self.n


@dataclass(frozen=True)
class FeasibilityReport:
    n: int
    d: int
    m: int
    r: int
    feasible: bool
    threshold: int
    walks_r: int
    walks_r_minus_1: int
    margin_r: int
    margin_r_minus_1: int
    parity_ok: bool
    sign_ok: bool


@dataclass(frozen=True)
class DualCheck:
    feasible: bool
    transform: LevelProfile
    violations: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.feasible


@dataclass(frozen=True)
class SupportBound:
    value: int
    crude: Optional[int]
    support_size: int


@dataclass(frozen=True)
class MRRWCertificate:
    n: int
    d: int
    r: int
    phi: LevelProfile
    gamma: LevelProfile
    gamma_hat: LevelProfile
    g: LevelProfile


@dataclass(frozen=True)
class MRRWComparison:
    n: int
    d: int
    r: int
    check: DualCheck
    bound: Optional[Fraction]
    walk_bound: Optional[Fraction] = None
    walk_parameters: dict = field(default_factory=dict)
    certificate: Optional[MRRWCertificate] = None


def _check_parameters(n: int, d: int, m: int, r: int) -> None:
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if not 1 <= d <= n:
        raise InvalidParameterError(f"d must satisfy 1 <= d <= n, got d={d}, n={n}")
    if m < 1:
        raise InvalidParameterError(f"m must be a positive integer, got {m}")
    if not 1 <= r <= n:
        raise InvalidParameterError(
            f"r must satisfy 1 <= r <= n (Gamma_hat uses levels r and r-1), got r={r}"
        )


def _assemble(n: int, d: int, m: int, r: int, rows: Sequence[Sequence[int]]) -> Certificate:
    c = (n - 2 * d) ** m
    phi = [(n - 2 * k) ** m - c for k in range(n + 1)]
    gamma = [rows[r][k] + rows[r - 1][k] for k in range(n + 1)]
    g = [phi[k] * gamma[k] * gamma[k] for k in range(n + 1)]
    cert = Certificate(
        n=n,
        d=d,
        m=m,
        r=r,
        phi=LevelProfile(n, tuple(phi)),
        gamma_hat=LevelProfile.unit(n, r) + LevelProfile.unit(n, r - 1),
        gamma=LevelProfile(n, tuple(gamma)),
        g=LevelProfile(n, tuple(g)),
    )
    if cert.trivial_regime:
        log.info("certificate (n=%d, d=%d) is in the trivial regime d > n/2", n, d)
    return cert


def build_certificate(n: int, d: int, m: int, r: int) -> Certificate:
    _check_parameters(n, d, m, r)
    if m % 2 == 0:
        raise InvalidParameterError(f"m must be odd, got {m}")
    return _assemble(n, d, m, r, krawtchouk_rows(n, r))


def _feasibility(
    n: int,
    d: int,
    m: int,
    r: int,
    walks: Optional[Tuple[int, int]] = None,
) -> FeasibilityReport:
    threshold = (n - 2 * d) ** m + 1
    if walks is None:
        walks = (walk_counts(n, r, m)[r - 1], walk_counts(n, r - 1, m)[r])
    walks_r, walks_r1 = walks
    parity_ok = m % 2 == 1
    sign_ok = all((n - 2 * k) ** m <= (n - 2 * d) ** m for k in range(d, n + 1))
    margin_r = walks_r - threshold
    margin_r1 = walks_r1 - threshold
    return FeasibilityReport(
        n=n,
        d=d,
        m=m,
        r=r,
        feasible=parity_ok and sign_ok and margin_r >= 0 and margin_r1 >= 0,
        threshold=threshold,
        walks_r=walks_r,
        walks_r_minus_1=walks_r1,
        margin_r=margin_r,
        margin_r_minus_1=margin_r1,
        parity_ok=parity_ok,
        sign_ok=sign_ok,
    )


def check_feasibility_walks(n: int, d: int, m: int, r: int) -> FeasibilityReport:
    """Exact walk criterion min(P_{r,m,-1}, P_{r-1,m,1}) >= (n-2d)^m + 1."""
    _check_parameters(n, d, m, r)
    return _feasibility(n, d, m, r)


def check_dual_feasible(g: LevelProfile, d: int) -> DualCheck:
    """F[g] >= 0, F[g](0) > 0 and g <= 0 on every level >= d, exactly."""
    transform = radial_transform(g)
    violations: List[str] = []
    for k in range(max(d, 0), g.n + 1):
        if g[k] > 0:
            violations.append(f"sign violation at level {k}")
    for i, v in enumerate(transform):
        if v < 0:
            violations.append(f"negative transform at level {i}")
    if transform[0] <= 0:
        violations.append("ĝ(0) not positive")
    return DualCheck(feasible=not violations, transform=transform, violations=tuple(violations))


def dual_ratio(g: LevelProfile) -> Fraction:
    """g(0) / g_hat(0) = g[0] 2^n / sum_k C(n,k) g[k]."""
    total = radial_sum(g)
    if total <= 0:
        raise DegenerateCertificateError(
            f"sum_x g(x) = {total} is not positive; the profile is infeasible or degenerate"
        )
    return g[0] * 2 ** g.n / total


def exact_bound(cert: Certificate) -> Fraction:
    return dual_ratio(cert.g)


def support_bound(cert: Certificate) -> SupportBound:
    n, d, m, r = cert.n, cert.d, cert.m, cert.r
    phi0 = n ** m - (n - 2 * d) ** m
    size = binomial(n, r) + binomial(n, r - 1)
    crude = 2 * n ** m * binomial(n, r) if 2 * r <= n else None
    return SupportBound(value=phi0 * size, crude=crude, support_size=size)


def ghat_zero_from_walks(cert: Certificate) -> int:
    """sum_x g(x) through the walk counts:

    2^n [C(n,r) (P_{r,m,-1} - c) + C(n,r-1) (P_{r-1,m,1} - c)],  c = (n-2d)^m.
    """
    rep = _feasibility(cert.n, cert.d, cert.m, cert.r)
    c = rep.threshold - 1
    n, r = cert.n, cert.r
    return 2 ** n * (
        binomial(n, r) * (rep.walks_r - c) + binomial(n, r - 1) * (rep.walks_r_minus_1 - c)
    )


# ---------- parameter search ----------

def lowest_level(n: int, d: int) -> int:
    """Smallest r >= 1 with |r - n/2| <= sqrt(d(n-d)), decided in integers."""

    def inside(r: int) -> bool:
        gap = n - 2 * r
        return gap <= 0 or gap * gap <= 4 * d * (n - d)

    r = max(1, math.ceil(n / 2 - math.sqrt(d * (n - d))))
    while r > 1 and inside(r - 1):
        r -= 1
    while not inside(r):
        r += 1
    return r


def default_m_max(n: int) -> int:
    """Largest odd m <= n / ln n, and at least 9."""
    top = int(n / math.log(n)) if n > 2 else 1
    if top % 2 == 0:
        top -= 1
    return max(9, top)


def _scan_level(args: Tuple[int, int, int, Tuple[int, ...]]) -> Tuple[int, List[Tuple[Fraction, int, int]], List[int]]:
    """Feasible (bound, r, m) triples for one level r, plus margin_r per m."""
    n, d, r, ms = args
    size = binomial(n, r) + binomial(n, r - 1)
    found: List[Tuple[Fraction, int, int]] = []
    margins: List[int] = []
    wanted = set(ms)
    down = iter_walk_counts(n, r, max(ms))
    up = iter_walk_counts(n, r - 1, max(ms))
    for from_r, from_r1 in zip(down, up):
        m = from_r.m
        if m not in wanted:
            continue
        rep = _feasibility(n, d, m, r, walks=(from_r[r - 1], from_r1[r]))
        margins.append(rep.margin_r)
        if not rep.feasible:
            continue
        c = rep.threshold - 1
        ghat0 = binomial(n, r) * (rep.walks_r - c) + binomial(n, r - 1) * (rep.walks_r_minus_1 - c)
        if ghat0 <= 0:
            continue
        found.append((Fraction((n ** m - c) * size * size, ghat0), r, m))
    return r, found, margins


def _crossings(margins: Sequence[int]) -> int:
    signs = [v >= 0 for v in margins]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def auto_select(
    n: int,
    d: int,
    window: Optional[int] = None,
    m_max: Optional[int] = None,
    jobs: int = 1,
) -> Certificate:
    """Feasible walk certificate with the smallest exact bound on the search grid.

    r runs upward from the lower edge of |r - n/2| <= sqrt(d(n-d)) over `window`
    offsets (default ceil(sqrt n)); odd m runs over 3..m_max (default: the
    largest odd m <= n / ln n). If nothing in the window is feasible the scan
    continues upward to r = n. Ties go to the smallest r, then the smallest m.
    """
    if n < 2 or not 1 <= d <= n // 2:
        raise InvalidParameterError(f"auto_select needs 1 <= d <= n/2, got n={n}, d={d}")
    window = math.isqrt(n - 1) + 1 if window is None else window
    m_max = default_m_max(n) if m_max is None else m_max
    if m_max < 3:
        raise InvalidParameterError(f"m_max must be at least 3, got {m_max}")
    ms = tuple(range(3, m_max + 1, 2))
    r_lo = lowest_level(n, d)
    r_hi = max(r_lo, min(r_lo + window, (n + 1) // 2))

    best = _search(n, d, list(range(r_lo, r_hi + 1)), ms, jobs)
    if best is None and r_hi < n:
        log.info("no feasible pair for r in [%d, %d]; extending the scan to r = %d", r_lo, r_hi, n)
        best = _search(n, d, list(range(r_hi + 1, n + 1)), ms, jobs)
    if best is None:
        raise NoFeasibleCertificateError(
            f"no feasible walk certificate for n={n}, d={d} with odd m in 3..{m_max}"
        )
    bound, r, m = best
    log.info("selected r=%d m=%d for n=%d d=%d (bound %s)", r, m, n, d, bound)
    cert = build_certificate(n, d, m, r)
    return cert


def _search(n: int, d: int, levels: List[int], ms: Tuple[int, ...], jobs: int):
    tasks = [(n, d, r, ms) for r in levels]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_level, tasks))
    else:
        results = [_scan_level(t) for t in tasks]
    best = None
    for r, found, margins in results:
        if _crossings(margins) > 1 and 2 * math.sqrt(r * (n - r)) > n - 2 * d:
            log.warning("margin_r changes sign more than once in m for n=%d d=%d r=%d", n, d, r)
        for triple in found:
            if best is None or triple < best:
                best = triple
    return best


# ---------- comparison certificate ----------

def build_mrrw_certificate(n: int, d: int, r: int) -> MRRWCertificate:
    """phi(x) = 2(d-|x|), Gamma(x) = sum_{j<=r} C(n,j)^-1 K_j(d) K_j(|x|).

    Nothing is asserted about feasibility; run check_dual_feasible on g.
    """
    if not 1 <= d <= n:
        raise InvalidParameterError(f"d must satisfy 1 <= d <= n, got d={d}, n={n}")
    if not 0 <= r <= n:
        raise InvalidParameterError(f"r must satisfy 0 <= r <= n, got r={r}")
    rows = krawtchouk_rows(n, r)
    hat = [Fraction(rows[j][d], binomial(n, j)) if j <= r else Fraction(0) for j in range(n + 1)]
    gamma = [sum((hat[j] * rows[j][k] for j in range(r + 1)), Fraction(0)) for k in range(n + 1)]
    phi = [2 * (d - k) for k in range(n + 1)]
    g = [phi[k] * gamma[k] * gamma[k] for k in range(n + 1)]
    return MRRWCertificate(
        n=n,
        d=d,
        r=r,
        phi=LevelProfile(n, tuple(phi)),
        gamma=LevelProfile(n, tuple(gamma)),
        gamma_hat=LevelProfile(n, tuple(hat)),
        g=LevelProfile(n, tuple(g)),
    )


def mrrw_comparison(n: int, d: int, r: int) -> MRRWComparison:
    cert = build_mrrw_certificate(n, d, r)
    check = check_dual_feasible(cert.g, d)
    bound = dual_ratio(cert.g) if check else None
    walk_bound = None
    params: dict = {}
    if check and 2 * d <= n and n >= 2:
        try:
            walk = auto_select(n, d)
        except NoFeasibleCertificateError:
            log.debug("no walk certificate to compare against for n=%d d=%d", n, d)
        else:
            walk_bound = exact_bound(walk)
            params = {"m": walk.m, "r": walk.r}
    return MRRWComparison(
        n=n,
        d=d,
        r=r,
        check=check,
        bound=bound,
        walk_bound=walk_bound,
        walk_parameters=params,
        certificate=cert,
    )
