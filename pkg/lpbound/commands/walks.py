import math
from pathlib import Path
from typing import Optional

import typer

from ..console import csv_text, emit, fail, say
from ..errors import LPBoundError
from ..walks import walk_counts, walk_root


def walks(
    n: int = typer.Option(..., "--n"),
    r: int = typer.Option(..., "--r", help="Start level."),
    m: int = typer.Option(..., "--m", help="Walk length."),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Length-m walk counts from a fixed weight-r vertex, by end level."""
    try:
        table = walk_counts(n, r, m)
    except LPBoundError as e:
        raise fail(e) from e

    rows = [[str(level), str(count)] for level, count in enumerate(table.counts) if count]
    emit(csv_text(["level", "count"], rows), out)

    if m == 0 or not 0 < r < n:
        return
    steps = (-1, 1) if m % 2 else (0,)
    roots = ", ".join(f"j={j:+d}: {walk_root(table[r + j], m):.6g}" for j in steps)
    say(f"P^(1/m) {roots}; 2*sqrt(r(n-r)) = {2 * math.sqrt(r * (n - r)):.6g}")
