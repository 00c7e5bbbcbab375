# lpbound/console.py
import csv
import io
import logging
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import typer
from rich.console import Console
from rich.logging import RichHandler

from .config import get_settings
from .errors import LPBoundError

# Diagnostics go to stderr; results go to stdout or --out.
console = Console(stderr=True, soft_wrap=True)


class OutputFormat(str, Enum):
    csv = "csv"
    json = "json"


def setup_logging(verbose: bool = False) -> None:
    settings = get_settings()
    level = logging.DEBUG if verbose else settings.log_level
    root = logging.getLogger("lpbound")
    root.handlers.clear()
    root.addHandler(RichHandler(console=console, show_path=False, rich_tracebacks=False))
    root.setLevel(level)


def say(message: str, style: Optional[str] = None) -> None:
    console.print(message, style=style, markup=False, highlight=False)


def fail(err: LPBoundError) -> typer.Exit:
    say(f"error: {err.detail}", style="bold red")
    return typer.Exit(code=err.exit_code)


def csv_text(columns: Sequence[str], rows: Sequence[Union[Dict[str, str], Sequence[str]]]) -> str:
    buf = io.StringIO()
    if rows and isinstance(rows[0], dict):
        writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
    return buf.getvalue()


def emit(data: Union[str, bytes], out: Optional[Path]) -> None:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if not data.endswith("\n"):
        data += "\n"
    if out is None:
        typer.echo(data, nl=False)
    else:
        out.write_text(data, encoding="utf-8")
        logging.getLogger(__name__).info("wrote %s", out)


def cells(values: List) -> List[str]:
    return ["" if v is None else str(v) for v in values]
