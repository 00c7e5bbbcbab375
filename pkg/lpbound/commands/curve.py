from dataclasses import asdict
from pathlib import Path
from typing import Optional

import typer

from ..config import get_settings
from ..console import OutputFormat, cells, csv_text, emit, fail
from ..curves import curve_rows
from ..errors import LPBoundError
from ..schemas import CurveRowSchema, dump_json_list


def curve(
    points: int = typer.Option(51, "--points", help="Number of δ values in [0, 1/2]."),
    n: Optional[int] = typer.Option(None, "--n", help="Add a certificate exponent column at this length."),
    fmt: OutputFormat = typer.Option(OutputFormat.csv, "--format"),
    out: Optional[Path] = typer.Option(None, "--out"),
    jobs: Optional[int] = typer.Option(None, "--jobs", min=1),
):
    """Rate against relative distance: GV, the first LP bound, and optionally a finite-n column."""
    try:
        rows = curve_rows(points, n_finite=n, jobs=jobs or get_settings().jobs)
    except LPBoundError as e:
        raise fail(e) from e

    if fmt is OutputFormat.json:
        emit(dump_json_list([CurveRowSchema(**asdict(row)) for row in rows]), out)
        return
    columns = ["delta", "gv", "mrrw1"] + (["cert_exponent"] if n is not None else [])
    table = [
        cells([row.delta, row.gv, row.mrrw1] + ([row.cert_exponent] if n is not None else []))
        for row in rows
    ]
    emit(csv_text(columns, table), out)
