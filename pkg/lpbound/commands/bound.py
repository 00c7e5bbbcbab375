from pathlib import Path
from typing import Optional

import typer

from ..config import get_settings
from ..console import OutputFormat, cells, csv_text, emit, fail
from ..errors import InvalidParameterError, LPBoundError
from ..reports import Method, compute_bound
from ..schemas import certificate_out, dump_json, rational_str, report_out

CERTIFICATE_METHODS = (Method.certificate, Method.support, Method.mrrw)


def bound(
    n: int = typer.Option(..., "--n", help="Code length."),
    d: int = typer.Option(..., "--d", help="Minimum distance."),
    method: Method = typer.Option(Method.certificate, "--method"),
    m: Optional[int] = typer.Option(None, "--m", help="Certificate exponent (odd); with --r."),
    r: Optional[int] = typer.Option(None, "--r", help="Certificate level; with --m."),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the report here instead of stdout."),
    jobs: Optional[int] = typer.Option(None, "--jobs", min=1),
    witness: Optional[str] = typer.Option(
        None, "--witness", help="Write an optimal code as bitstrings to this file, '-' for stdout (oracle method)."
    ),
    emit_certificate: Optional[Path] = typer.Option(
        None, "--emit-certificate", help="Write the certificate JSON here; `verify` reads it back."
    ),
):
    """Upper bound on A(n,d) by one method."""
    try:
        if emit_certificate is not None and method not in CERTIFICATE_METHODS:
            raise InvalidParameterError(f"--emit-certificate needs a certificate method, not {method.value}")
        if witness is not None and method is not Method.oracle:
            raise InvalidParameterError(f"--witness needs the oracle method, not {method.value}")
        rep = compute_bound(n, d, method.value, m=m, r=r, jobs=jobs or get_settings().jobs)
    except LPBoundError as e:
        raise fail(e) from e

    if emit_certificate is not None:
        emit(dump_json(certificate_out(rep.certificate)), emit_certificate)
    if fmt is OutputFormat.json:
        schema = report_out(rep)
        if witness is None:
            schema = schema.model_copy(update={"witness": None})
        emit(dump_json(schema), out)
    else:
        columns = ["n", "d", "method", "bound", "exponent", "m", "r"]
        row = cells([n, d, rep.method, rational_str(rep.bound), rep.exponent, rep.parameters.get("m"), rep.parameters.get("r")])
        emit(csv_text(columns, [row]), out)
    if witness is not None:
        emit(rep.witness.to_bitstrings(), None if witness == "-" else Path(witness))
