"""One bound for one (n, d) by a chosen method, and the sweep over many of them."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .certificates import (
    Certificate,
    FeasibilityReport,
    MRRWCertificate,
    auto_select,
    build_certificate,
    build_mrrw_certificate,
    check_dual_feasible,
    check_feasibility_walks,
    dual_ratio,
    exact_bound,
    mrrw_comparison,
    support_bound,
)
from .codes import Code, max_code
from .delsarte import LPInstance, LPSolution, solve_primal
from .errors import InfeasibleDualError, InvalidParameterError, LPBoundError
from .schemas import rational_str
from .walks import log2_fraction

log = logging.getLogger(__name__)


class Method(str, Enum):
    certificate = "certificate"
    lp = "lp"
    oracle = "oracle"
    support = "support"
    mrrw = "mrrw"


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    method: str
    bound: Fraction
    exponent: float
    parameters: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Code] = None
    certificate: Optional[Union[Certificate, MRRWCertificate]] = None
    feasibility: Optional[FeasibilityReport] = None
    lp_solution: Optional[LPSolution] = None


def _certificate(
    n: int, d: int, m: Optional[int], r: Optional[int], jobs: int
) -> Tuple[Certificate, FeasibilityReport, Dict[str, Any]]:
    if (m is None) != (r is None):
        raise InvalidParameterError("give both --m and --r, or neither for automatic selection")
    if m is None:
        cert = auto_select(n, d, jobs=jobs)
        rep = check_feasibility_walks(n, d, cert.m, cert.r)
        params: Dict[str, Any] = {"m": cert.m, "r": cert.r, "selected": "auto"}
    else:
        rep = check_feasibility_walks(n, d, m, r)
        if not rep.feasible:
            raise InfeasibleDualError(
                f"(m={m}, r={r}) is not feasible for n={n}, d={d}: "
                f"parity_ok={rep.parity_ok}, sign_ok={rep.sign_ok}, "
                f"margins ({rep.margin_r}, {rep.margin_r_minus_1}) against threshold {rep.threshold}"
            )
        cert = build_certificate(n, d, m, r)
        params = {"m": m, "r": r, "selected": "given"}
    params["threshold"] = str(rep.threshold)
    params["margin_r"] = str(rep.margin_r)
    params["margin_r_minus_1"] = str(rep.margin_r_minus_1)
    return cert, rep, params


def _mrrw(n: int, d: int, r: Optional[int]) -> Tuple[MRRWCertificate, Fraction, Dict[str, Any]]:
    if r is not None:
        cmp = mrrw_comparison(n, d, r)
        if cmp.bound is None:
            raise InfeasibleDualError("; ".join(cmp.check.violations))
        params: Dict[str, Any] = {"r": r}
        if cmp.walk_bound is not None:
            params["walk_bound"] = rational_str(cmp.walk_bound)
            params.update({f"walk_{k}": v for k, v in cmp.walk_parameters.items()})
        return cmp.certificate, cmp.bound, params
    best: Optional[Tuple[Fraction, MRRWCertificate]] = None
    for level in range(n + 1):
        cert = build_mrrw_certificate(n, d, level)
        if not check_dual_feasible(cert.g, d):
            continue
        bound = dual_ratio(cert.g)
        if best is None or bound < best[0]:
            best = (bound, cert)
    if best is None:
        raise InfeasibleDualError(f"no level r gives a dual feasible comparison certificate for n={n}, d={d}")
    return best[1], best[0], {"r": best[1].r}


def compute_bound(
    n: int,
    d: int,
    method: str = Method.certificate,
    m: Optional[int] = None,
    r: Optional[int] = None,
    jobs: int = 1,
) -> BoundReport:
    method = Method(method)
    witness = cert = rep = sol = None
    if method is Method.certificate:
        cert, rep, params = _certificate(n, d, m, r, jobs)
        bound = exact_bound(cert)
    elif method is Method.support:
        cert, rep, params = _certificate(n, d, m, r, jobs)
        sb = support_bound(cert)
        bound = Fraction(sb.value)
        params["support_size"] = str(sb.support_size)
        if sb.crude is not None:
            params["crude"] = str(sb.crude)
    elif method is Method.lp:
        sol = solve_primal(LPInstance(n, d))
        bound = sol.value
        params = {"status": sol.status, "pivots": sol.pivots}
    elif method is Method.oracle:
        size, witness = max_code(n, d)
        bound = Fraction(size)
        params = {}
    else:
        cert, bound, params = _mrrw(n, d, r)
    return BoundReport(
        n=n,
        d=d,
        method=method.value,
        bound=bound,
        exponent=log2_fraction(bound) / n,
        parameters=params,
        witness=witness,
        certificate=cert,
        feasibility=rep,
        lp_solution=sol,
    )


def _sweep_point(args: Tuple[int, int, Tuple[str, ...]]) -> Dict[str, str]:
    n, d, methods = args
    row = {"n": str(n), "d": str(d)}
    for method in methods:
        try:
            rep = compute_bound(n, d, method)
        except LPBoundError as e:
            log.warning("sweep n=%d d=%d method=%s failed: %s", n, d, method, e.detail)
            row[f"{method}_bound"] = ""
            row[f"{method}_exponent"] = ""
        else:
            row[f"{method}_bound"] = rational_str(rep.bound)
            row[f"{method}_exponent"] = str(rep.exponent)
    return row


def sweep_rows(
    ns: Sequence[int],
    methods: Sequence[str],
    ds: Optional[Sequence[int]] = None,
    jobs: int = 1,
) -> Tuple[List[str], List[Dict[str, str]]]:
    """One row per (n, d) in grid order, the requested methods side by side.

    A method that cannot handle a point leaves its cells empty.
    """
    if not ns or not methods:
        raise InvalidParameterError("a sweep needs at least one n and one method")
    names = tuple(Method(m).value for m in methods)
    points = []
    for n in ns:
        for d in (range(1, n + 1) if ds is None else ds):
            if 1 <= d <= n:
                points.append((n, d, names))
    columns = ["n", "d"] + [f"{m}_{col}" for m in names for col in ("bound", "exponent")]
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_point, points))
    else:
        rows = [_sweep_point(p) for p in points]
    log.info("sweep finished: %d points, methods %s", len(rows), ", ".join(names))
    return columns, rows
