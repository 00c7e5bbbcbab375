"""Asymptotic rate curves and the finite-n certificate exponent next to them."""
from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .certificates import auto_select, exact_bound
from .errors import DegenerateCertificateError, InvalidParameterError, NoFeasibleCertificateError
from .radial import binary_entropy
from .walks import log2_fraction

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveRow:
    delta: float
    gv: float
    mrrw1: float
    cert_exponent: Optional[float] = None


def _check_delta(delta: float) -> None:
    if not 0 <= delta <= 1:
        raise InvalidParameterError(f"relative distance must lie in [0, 1], got {delta}")


def gv_rate(delta: float) -> float:
    """1 - H(delta), clamped to 0 from delta = 1/2 on."""
    _check_delta(delta)
    if delta == 0:
        return 1.0
    if delta >= 0.5:
        return 0.0
    return 1.0 - binary_entropy(delta)


def first_lp_rate(delta: float) -> float:
    """H(1/2 - sqrt(delta(1-delta))), clamped to 0 from delta = 1/2 on."""
    _check_delta(delta)
    if delta == 0:
        return 1.0
    if delta >= 0.5:
        return 0.0
    return binary_entropy(0.5 - math.sqrt(delta * (1 - delta)))


def curve_points(k: int) -> List[float]:
    if k < 2:
        raise InvalidParameterError(f"a curve needs at least 2 points, got {k}")
    return [i / (2 * (k - 1)) for i in range(k)]


def cert_exponent(n: int, d: int, jobs: int = 1) -> Optional[float]:
    """log2(exact_bound(auto_select(n, d))) / n; None for d = 0."""
    if d == 0:
        return None
    cert = auto_select(n, d, jobs=jobs)
    return log2_fraction(exact_bound(cert)) / n


def _row(args: Tuple[int, int, Optional[int]]) -> CurveRow:
    i, k, n_finite = args
    delta = i / (2 * (k - 1))
    exponent = None
    # endpoints are set analytically; only interior points get a certificate
    if n_finite is not None and 0 < i < k - 1:
        d = i * n_finite // (2 * (k - 1))
        try:
            exponent = cert_exponent(n_finite, d)
        except (NoFeasibleCertificateError, DegenerateCertificateError) as e:
            log.warning("no certificate exponent at delta=%.4f (n=%d, d=%d): %s", delta, n_finite, d, e.detail)
    return CurveRow(delta=delta, gv=gv_rate(delta), mrrw1=first_lp_rate(delta), cert_exponent=exponent)


def curve_rows(k: int, n_finite: Optional[int] = None, jobs: int = 1) -> List[CurveRow]:
    curve_points(k)
    if n_finite is not None and n_finite < 2:
        raise InvalidParameterError(f"finite-n column needs n >= 2, got {n_finite}")
    tasks = [(i, k, n_finite) for i in range(k)]
    if jobs > 1 and n_finite is not None:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row, tasks))
    else:
        rows = [_row(t) for t in tasks]
    log.info("curve with %d points (finite n=%s)", k, n_finite)
    return rows
