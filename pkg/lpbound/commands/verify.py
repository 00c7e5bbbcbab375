from pathlib import Path
from typing import Optional

import typer

from ..certificates import check_dual_feasible, check_feasibility_walks, dual_ratio
from ..console import fail, say
from ..errors import InfeasibleDualError, LPBoundError, ParseError
from ..schemas import CertificateSchema, ProfileSchema, load_json, profile_in, rational_str, validate


def verify(
    path: Path = typer.Argument(..., exists=True, dir_okay=False, help="Certificate JSON or raw profile JSON."),
    d: Optional[int] = typer.Option(None, "--d", help="Minimum distance; required for raw profiles."),
):
    """Check a dual solution exactly and print the bound it gives."""
    try:
        _verify(path, d)
    except LPBoundError as e:
        raise fail(e) from e


def _verify(path: Path, d: Optional[int]) -> None:
    obj = load_json(path.read_bytes())
    params = None
    if "g" in obj:
        cert = validate(CertificateSchema, obj)
        g = profile_in(cert.g, cert.n)
        d = cert.d if d is None else d
        if cert.kind == "walk":
            params = (cert.n, d, cert.m, cert.r)
    else:
        prof = validate(ProfileSchema, obj)
        g = profile_in(prof.values, prof.n)
        if d is None:
            raise ParseError("a raw profile needs --d")

    check = check_dual_feasible(g, d)
    for line in check.violations:
        say(line, style="red")
    say(f"dual check: {'pass' if check else 'fail'}")

    if params is not None:
        rep = check_feasibility_walks(*params)
        say(
            f"walk criterion: {'pass' if rep.feasible else 'fail'} "
            f"(threshold {rep.threshold}, margins {rep.margin_r}, {rep.margin_r_minus_1})"
        )
    if not check:
        raise InfeasibleDualError(f"profile is not dual feasible for d={d}")
    say(f"bound: {rational_str(dual_ratio(g))}")
