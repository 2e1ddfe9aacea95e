"""
Command module for formal group laws.
"""
from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ...config.run import Command, OutputFormat, RunConfig
from ...config.settings import get_config
from ...expansion.formal import invariant_differential
from ...group.formal_group import (
    check_associativity,
    formal_log,
    group_law,
    lseries_formal_group,
    resolve_isomorphism,
)
from ...lseries.dirichlet import euler_coefficients, g_series
from ...utils.logging import get_logger
from ..output import EXIT_FAILURE, command_errors, console, emit_json, envelope, load_curve, trace_cache

logger = get_logger(__name__)

app = typer.Typer()


@app.callback(invoke_without_command=True)
def show_group_law(
    curve: str = typer.Option(..., "--curve", help="Curve as [a1,a2,a3,a4,a6]"),
    degree: int = typer.Option(8, "--degree", "-d", help="Total degree bound D (terms of degree < D)"),
    cap: Optional[int] = typer.Option(None, "--assoc-cap", help="Associativity is checked below degree cap + 1"),
    isomorphism: bool = typer.Option(False, "--isomorphism", help="Also build G from the L-series and the strict isomorphism"),
    phi_order: int = typer.Option(21, "--phi-order", help="Coefficients of phi to compute"),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of a table"),
    cache: Optional[Path] = typer.Option(None, "--cache", envvar="FORMALE_CACHE", help="Trace cache file"),
    assert_minimal: bool = typer.Option(False, "--assert-minimal", help="Treat the model as minimal at bad primes"),
) -> None:
    """F(X, Y) = f^-1(f(X) + f(Y)) with f the integral of omega."""
    settings = get_config()
    with command_errors("build the formal group law"):
        config = RunConfig(
            command=Command.GROUP_LAW,
            curve=load_curve(curve),
            order=max(degree, phi_order if isomorphism else 4),
            output=OutputFormat.JSON if as_json else OutputFormat.TEXT,
            cache_path=cache if cache is not None else settings.cache_path,
            assert_minimal=assert_minimal,
        )
        assert config.curve is not None and config.order is not None
        b = invariant_differential(config.curve, config.order)
        law = group_law(config.curve, degree, b=b)
        associative = check_associativity(law, cap if cap is not None else settings.associativity_degree_cap)
        flags = {
            "identity": law.identity_holds(),
            "commutative": law.is_commutative(),
            "associative": associative,
            "integral": law.integrality_verified,
        }

        report = None
        if isomorphism:
            with trace_cache(config.cache_path) as traces:
                c = euler_coefficients(
                    config.curve, config.order, cache=traces, assert_minimal=config.assert_minimal
                )
            target = lseries_formal_group(c.values, degree)
            f = formal_log(b.truncate(phi_order))
            g = g_series(c, phi_order + 1)
            report = resolve_isomorphism(f, g, law, target, degree)

    if config.json:
        payload = {"degree": degree, "checks": flags, "law": law.to_dict()}
        if report is not None:
            payload["isomorphism"] = report.to_dict()
        emit_json(envelope("group-law", config.curve, **payload))
    else:
        table = Table(title=f"Formal group law of {config.curve.describe()} below degree {degree}")
        table.add_column("i", justify="right")
        table.add_column("j", justify="right")
        table.add_column("Coefficient of X^i Y^j", justify="right")
        for (i, j), value in law.F:
            table.add_row(str(i), str(j), str(value))
        console.print(table)
        for name, holds in flags.items():
            console.print(f"{name}: {'true' if holds else 'false'}")
        if report is not None:
            chosen = report.phi
            console.print(f"strict isomorphism: {report.chosen or 'none'}")
            for candidate in report.candidates:
                console.print(
                    f"  {candidate.orientation}: integral={candidate.integral} "
                    f"intertwines={candidate.intertwines}"
                )
            if chosen is not None:
                console.print("  phi = " + " + ".join(
                    f"{coeff}*z^{k}" for k, coeff in enumerate(chosen.series.coeffs) if coeff
                ))

    if not all(flags.values()) or (report is not None and (report.phi is None or not report.phi.integral)):
        raise typer.Exit(EXIT_FAILURE)
