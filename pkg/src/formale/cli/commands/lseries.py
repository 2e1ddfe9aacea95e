"""
Command module for L-series coefficients.
"""
from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ...config.run import Command, OutputFormat, RunConfig
from ...config.settings import get_config
from ...lseries.dirichlet import (
    DirichletCoefficients,
    Provenance,
    euler_coefficients,
    eta_product_level11,
    g_series,
)
from ...utils.logging import get_logger
from ...utils.validation import decimal_strings, load_integer_file
from ..output import EXIT_FAILURE, command_errors, console, emit_json, envelope, load_curve, trace_cache

logger = get_logger(__name__)

app = typer.Typer()


def _verdict(label: str, first_difference: Optional[int]) -> str:
    return f"{label}: {'true' if first_difference is None else 'false'}"


@app.callback(invoke_without_command=True)
def lseries(
    curve: str = typer.Option(..., "--curve", help="Curve as [a1,a2,a3,a4,a6]"),
    n: int = typer.Option(50, "--n", help="Number of coefficients c_1 .. c_n"),
    eta_compare: bool = typer.Option(False, "--eta-compare", help="Compare with the level 11 eta product"),
    compare_file: Optional[Path] = typer.Option(None, "--compare", help="Compare with a JSON integer array"),
    export: Optional[Path] = typer.Option(None, "--export", help="Write c_1 .. c_n as a JSON integer array"),
    show_g: bool = typer.Option(False, "--g", help="Also print g(x) = sum c_n x^n / n"),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of a table"),
    cache: Optional[Path] = typer.Option(None, "--cache", envvar="FORMALE_CACHE", help="Trace cache file"),
    assert_minimal: bool = typer.Option(False, "--assert-minimal", help="Treat the model as minimal at bad primes"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker threads"),
) -> None:
    """Dirichlet coefficients from the Euler product of local factors."""
    settings = get_config()
    with command_errors("expand the L-series"):
        config = RunConfig(
            command=Command.LSERIES,
            curve=load_curve(curve),
            n_max=n,
            output=OutputFormat.JSON if as_json else OutputFormat.TEXT,
            cache_path=cache if cache is not None else settings.cache_path,
            assert_minimal=assert_minimal,
            workers=workers if workers is not None else settings.workers,
        )
        assert config.curve is not None and config.n_max is not None
        with trace_cache(config.cache_path) as traces:
            c = euler_coefficients(
                config.curve, config.n_max, cache=traces,
                assert_minimal=config.assert_minimal, workers=config.workers,
            )

        comparisons = {}
        if eta_compare:
            comparisons["euler == eta"] = c.first_difference(eta_product_level11(config.n_max))
        if compare_file is not None:
            other = DirichletCoefficients(tuple(load_integer_file(compare_file)), Provenance.USER_SUPPLIED)
            comparisons["euler == file"] = c.first_difference(other)
        if export is not None:
            export.parent.mkdir(parents=True, exist_ok=True)
            export.write_text(c.to_json() + "\n", encoding="utf-8")
            logger.info(f"Wrote {c.bound} coefficients to {export}")
        g = g_series(c) if show_g else None

    if config.json:
        payload = {
            "n": c.bound,
            "provenance": c.provenance.value,
            "c": decimal_strings(c.values),
            "comparisons": {
                label: {"equal": diff is None, "first_difference": diff}
                for label, diff in comparisons.items()
            },
        }
        if g is not None:
            payload["g"] = [str(coeff) for coeff in g.coeffs]
        emit_json(envelope("lseries", config.curve, **payload))
    else:
        table = Table(title=f"L-series coefficients of {config.curve.describe()}")
        table.add_column("n", justify="right")
        table.add_column("c_n", justify="right")
        if g is not None:
            table.add_column("c_n / n", justify="right")
        for index, value in enumerate(c.values, start=1):
            row = [str(index), str(value)]
            if g is not None:
                row.append(str(g.coeffs[index]))
            table.add_row(*row)
        console.print(table)
        for label, diff in comparisons.items():
            console.print(_verdict(label, diff))
            if diff is not None:
                console.print(f"[red]first difference at n = {diff}[/red]")

    if any(diff is not None for diff in comparisons.values()):
        raise typer.Exit(EXIT_FAILURE)
