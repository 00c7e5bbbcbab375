from pathlib import Path
from typing import List, Optional

import typer

from ..config import get_settings
from ..console import OutputFormat, csv_text, emit, fail
from ..errors import LPBoundError
from ..reports import Method, sweep_rows
from ..schemas import dump_json_rows


def sweep(
    n: List[int] = typer.Option(..., "--n", help="Code length; repeat for several."),
    d: Optional[List[int]] = typer.Option(None, "--d", help="Distances to evaluate (default 1..n)."),
    method: Optional[List[Method]] = typer.Option(None, "--method", help="Repeat for several (default lp, certificate)."),
    fmt: OutputFormat = typer.Option(OutputFormat.csv, "--format"),
    out: Optional[Path] = typer.Option(None, "--out"),
    jobs: Optional[int] = typer.Option(None, "--jobs", min=1),
):
    """Bounds for a grid of (n, d), one row per point with the methods side by side."""
    methods = [m.value for m in method] if method else [Method.lp.value, Method.certificate.value]
    try:
        columns, rows = sweep_rows(n, methods, ds=d or None, jobs=jobs or get_settings().jobs)
    except LPBoundError as e:
        raise fail(e) from e
    if fmt is OutputFormat.json:
        emit(dump_json_rows(rows), out)
    else:
        emit(csv_text(columns, rows), out)
