"""
Command module for expanding w(z) and the invariant differential.
"""
from typing import Optional

import typer
from rich.table import Table

from ...combinatorics.closed_forms import b_closed_family1, b_closed_family2
from ...config.run import Command, OutputFormat, RunConfig
from ...config.settings import get_config
from ...expansion.formal import ExpansionBundle, expand
from ...utils.logging import get_logger
from ..output import EXIT_FAILURE, command_errors, console, emit_json, envelope, load_curve

logger = get_logger(__name__)

app = typer.Typer()


def closed_form_mismatches(bundle: ExpansionBundle) -> Optional[list]:
    """
    Indices n where the closed form for the curve's family disagrees with
    b(n); None when the curve is in neither family.
    """
    curve = bundle.curve
    if curve.is_family1:
        a1, a2, a3, a4, _ = curve.coefficients
        closed = [b_closed_family1(a1, a2, a3, a4, n - 1) for n in range(1, bundle.order + 1)]
    elif curve.is_family2:
        # only b(3k - 2) can be nonzero
        closed = [
            b_closed_family2(curve.a3, curve.a6, (n + 2) // 3) if n % 3 == 1 else 0
            for n in range(1, bundle.order + 1)
        ]
    else:
        return None
    return [n for n in range(1, bundle.order + 1) if closed[n - 1] != bundle.b_at(n)]


@app.callback(invoke_without_command=True)
def expand_curve(
    curve: str = typer.Option(..., "--curve", help="Curve as [a1,a2,a3,a4,a6]"),
    order: Optional[int] = typer.Option(None, "--order", "-n", help="Number of coefficients (default from settings)"),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of a table"),
    closed_form: bool = typer.Option(False, "--closed-form", help="Compare b(n) with the closed form of the curve's family"),
    nonzero: bool = typer.Option(False, "--nonzero", help="Only list rows where s_n or b(n) is nonzero"),
) -> None:
    """Expand s_n (coefficients of w) and b(n) (coefficients of omega)."""
    with command_errors("expand"):
        config = RunConfig(
            command=Command.EXPAND,
            curve=load_curve(curve),
            order=order if order is not None else get_config().default_order,
            output=OutputFormat.JSON if as_json else OutputFormat.TEXT,
        )
        assert config.curve is not None and config.order is not None
        bundle = expand(config.curve, config.order)
        mismatches = closed_form_mismatches(bundle) if closed_form else None

    if config.json:
        payload = bundle.to_dict()
        if closed_form:
            payload["closed_form_mismatches"] = mismatches
        emit_json(envelope("expand", config.curve, **payload))
    else:
        table = Table(title=f"Expansion of {config.curve.describe()}")
        table.add_column("n", justify="right")
        table.add_column("s_n", justify="right")
        table.add_column("b(n)", justify="right")
        for n in range(1, bundle.order + 1):
            s_n = bundle.s(n) if n < bundle.order else None
            b_n = bundle.b_at(n)
            if nonzero and not b_n and not s_n:
                continue
            table.add_row(str(n), "" if s_n is None else str(s_n), str(b_n))
        console.print(table)
        if closed_form:
            if mismatches is None:
                console.print("[yellow]No closed form applies to this curve[/yellow]")
            elif mismatches:
                console.print(f"[red]Closed form disagrees at n = {mismatches}[/red]")
            else:
                console.print("[green]closed form == expansion: true[/green]")

    if mismatches:
        logger.error(f"Closed form disagrees with the expansion at {len(mismatches)} indices")
        raise typer.Exit(EXIT_FAILURE)
