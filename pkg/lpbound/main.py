# lpbound/main.py
import typer

from .commands import bound, curve, sweep, verify, walks
from .console import fail, setup_logging
from .errors import LPBoundError

app = typer.Typer(
    name="lpbound",
    help="Exact linear programming upper bounds on binary codes.",
    no_args_is_help=True,
    add_completion=False,
)


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level.")):
    try:
        setup_logging(verbose)
    except LPBoundError as e:
        raise fail(e) from e


app.command("bound")(bound.bound)
app.command("curve")(curve.curve)
app.command("walks")(walks.walks)
app.command("verify")(verify.verify)
app.command("sweep")(sweep.sweep)
