"""
Command module for the congruence checks.

Every subcommand exits 1 when any congruence fails.
"""
from pathlib import Path
from typing import List, Optional

import typer
from rich.table import Table

from ...combinatorics.closed_forms import compare_tate_remark
from ...config.run import Command, OutputFormat, RunConfig
from ...config.settings import get_config
from ...congruences.checker import (
    LEVEL11_CURVE,
    check_cor1,
    check_cor33,
    check_cor34,
    check_remark11,
    check_sec4_trace,
    check_thm2,
    sweep_cor1,
    sweep_thm2,
)
from ...congruences.report import CongruenceReport
from ...curves.weierstrass import WeierstrassCurve
from ...utils.logging import get_logger
from ...utils.validation import validate_variant
from ..output import (
    EXIT_FAILURE,
    command_errors,
    console,
    emit_json,
    emit_reports,
    envelope,
    load_curve,
    trace_cache,
)

logger = get_logger(__name__)

app = typer.Typer(help="Check congruences between b(n), traces and L-series coefficients")

CURVE = typer.Option(..., "--curve", help="Curve as [a1,a2,a3,a4,a6]")
PRIME = typer.Option(None, "--p", help="Check a single prime")
P_MAX = typer.Option(None, "--p-max", help="Sweep every prime up to this bound")
S_MAX = typer.Option(2, "--s-max", help="Largest exponent s in the modulus p^s")
JSON = typer.Option(False, "--json", help="Print JSON instead of a table")
CACHE = typer.Option(None, "--cache", envvar="FORMALE_CACHE", help="Trace cache file")
MINIMAL = typer.Option(False, "--assert-minimal", help="Treat the model as minimal at bad primes")
WORKERS = typer.Option(None, "--workers", "-w", help="Worker threads for prime sweeps")
VARIANT = typer.Option(None, "--variant", help="Reading of the corollary: printed or a-power (default both)")


def _run_config(
    curve: Optional[WeierstrassCurve],
    p: Optional[int],
    p_max: Optional[int],
    n_max: Optional[int],
    s_max: Optional[int],
    as_json: bool,
    cache: Optional[Path],
    assert_minimal: bool = False,
    workers: Optional[int] = None,
) -> RunConfig:
    settings = get_config()
    return RunConfig(
        command=Command.CHECK,
        curve=curve,
        p=p,
        p_max=p_max if p_max is not None or p is not None else settings.default_p_max,
        n_max=n_max,
        s_max=s_max,
        output=OutputFormat.JSON if as_json else OutputFormat.TEXT,
        cache_path=cache if cache is not None else settings.cache_path,
        assert_minimal=assert_minimal,
        workers=workers if workers is not None else settings.workers,
    )


@app.command("thm2")
def thm2(
    curve: str = CURVE,
    p: Optional[int] = PRIME,
    p_max: Optional[int] = P_MAX,
    n_max: Optional[int] = typer.Option(None, "--n-max", help="Largest n (default 3p)"),
    s_max: int = S_MAX,
    as_json: bool = JSON,
    cache: Optional[Path] = CACHE,
    assert_minimal: bool = MINIMAL,
    workers: Optional[int] = WORKERS,
) -> None:
    """b(np) - t_p b(n) + p u_p b(n||p) = 0 mod p^s whenever p^(s-1) divides n."""
    with command_errors("check thm2"):
        config = _run_config(load_curve(curve), p, p_max, n_max, s_max, as_json, cache, assert_minimal, workers)
        assert config.curve is not None and config.s_max is not None
        with trace_cache(config.cache_path) as traces:
            if config.p is not None:
                reports = check_thm2(
                    config.curve, config.p, config.n_max or 3 * config.p, config.s_max,
                    assert_minimal=config.assert_minimal, cache=traces,
                )
            else:
                assert config.p_max is not None
                reports = sweep_thm2(
                    config.curve, config.p_max, config.s_max, n_max=config.n_max,
                    assert_minimal=config.assert_minimal, cache=traces, workers=config.workers,
                )
    emit_reports("check thm2", config.curve, reports, config.json)


@app.command("cor1")
def cor1(
    curve: str = CURVE,
    p: Optional[int] = PRIME,
    p_max: Optional[int] = P_MAX,
    n_max: int = typer.Option(10, "--n-max", help="Largest n"),
    s_max: int = S_MAX,
    as_json: bool = JSON,
    cache: Optional[Path] = CACHE,
    assert_minimal: bool = MINIMAL,
    workers: Optional[int] = WORKERS,
) -> None:
    """The good, multiplicative and additive clauses, chosen by the reduction type at p."""
    with command_errors("check cor1"):
        config = _run_config(load_curve(curve), p, p_max, n_max, s_max, as_json, cache, assert_minimal, workers)
        assert config.curve is not None and config.n_max is not None and config.s_max is not None
        with trace_cache(config.cache_path) as traces:
            if config.p is not None:
                reports = check_cor1(
                    config.curve, config.p, config.n_max, config.s_max,
                    assert_minimal=config.assert_minimal, cache=traces,
                )
            else:
                assert config.p_max is not None
                reports = sweep_cor1(
                    config.curve, config.p_max, config.n_max, config.s_max,
                    assert_minimal=config.assert_minimal, cache=traces, workers=config.workers,
                )
    emit_reports("check cor1", config.curve, reports, config.json)


@app.command("cor33")
def cor33(
    a: int = typer.Option(..., "--a", help="The curve y^2 = x^3 + a x"),
    p_max: Optional[int] = P_MAX,
    variant: Optional[str] = VARIANT,
    n_max: int = typer.Option(21, "--n-max", help="Largest n in part (c)"),
    as_json: bool = JSON,
    cache: Optional[Path] = CACHE,
    workers: Optional[int] = WORKERS,
) -> None:
    """Traces and binomial congruences of y^2 = x^3 + a x."""
    with command_errors("check cor33"):
        config = _run_config(None, None, p_max, n_max, None, as_json, cache, workers=workers)
        assert config.p_max is not None and config.n_max is not None
        reading = validate_variant(variant) if variant is not None else None
        with trace_cache(config.cache_path) as traces:
            reports = check_cor33(a, config.p_max, reading, config.n_max, cache=traces, workers=config.workers)
    emit_reports("check cor33", WeierstrassCurve(0, 0, 0, a, 0), reports, config.json)


@app.command("cor34")
def cor34(
    a: int = typer.Option(..., "--a", help="The curve y^2 + a y = x^3"),
    p_max: Optional[int] = P_MAX,
    variant: Optional[str] = VARIANT,
    n_max: int = typer.Option(10, "--n-max", help="Largest n in parts (c) and (d)"),
    s_max: int = S_MAX,
    as_json: bool = JSON,
    cache: Optional[Path] = CACHE,
    workers: Optional[int] = WORKERS,
) -> None:
    """Traces and binomial congruences of y^2 + a y = x^3."""
    with command_errors("check cor34"):
        config = _run_config(None, None, p_max, n_max, s_max, as_json, cache, workers=workers)
        assert config.p_max is not None and config.n_max is not None and config.s_max is not None
        reading = validate_variant(variant) if variant is not None else None
        with trace_cache(config.cache_path) as traces:
            reports = check_cor34(
                a, config.p_max, reading, config.n_max, config.s_max, cache=traces, workers=config.workers
            )
    emit_reports("check cor34", WeierstrassCurve(0, 0, a, 0, 0), reports, config.json)


@app.command("sec4")
def sec4(
    a3: int = typer.Option(..., "--a3", help="Coefficient a3 of y^2 + a3 y = x^3 + a6"),
    a6: int = typer.Option(..., "--a6", help="Coefficient a6 of y^2 + a3 y = x^3 + a6"),
    p_max: Optional[int] = P_MAX,
    as_json: bool = JSON,
    cache: Optional[Path] = CACHE,
    workers: Optional[int] = WORKERS,
) -> None:
    """The trace formula for y^2 + a3 y = x^3 + a6 at good primes."""
    with command_errors("check sec4"):
        curve = WeierstrassCurve(0, 0, a3, 0, a6)
        config = _run_config(curve, None, p_max, None, None, as_json, cache, workers=workers)
        assert config.p_max is not None
        with trace_cache(config.cache_path) as traces:
            reports = check_sec4_trace(a3, a6, config.p_max, cache=traces, workers=config.workers)
    emit_reports("check sec4", curve, reports, config.json)


@app.command("remark11")
def remark11(
    p_max: int = typer.Option(13, "--p-max", help="Largest prime (11 is always skipped)"),
    n_max: Optional[int] = typer.Option(None, "--n-max", help="Largest n (default 2p)"),
    s_max: int = S_MAX,
    as_json: bool = JSON,
    workers: Optional[int] = WORKERS,
) -> None:
    """b(np) - c_p b(n) + p b(n||p) = 0 mod p^s for y^2 - y = x^3 - x^2 with c from the eta product."""
    with command_errors("check remark11"):
        config = _run_config(LEVEL11_CURVE, None, p_max, n_max, s_max, as_json, None, workers=workers)
        assert config.p_max is not None and config.s_max is not None
        reports: List[CongruenceReport] = check_remark11(
            config.n_max, config.s_max, config.p_max, workers=config.workers
        )
    emit_reports("check remark11", LEVEL11_CURVE, reports, config.json)


@app.command("tate-remark")
def tate_remark(
    n_max: int = typer.Option(12, "--n-max", help="Largest n"),
    b: int = typer.Option(1, "--b", help="Tate normal form parameter b"),
    c: int = typer.Option(1, "--c", help="Tate normal form parameter c"),
    as_json: bool = JSON,
) -> None:
    """
    Compare the printed coefficient sums for the Tate normal form with b(n).

    Only a disagreement of the general sum is a failure; the b = c = 1
    specialisation is reported for information.
    """
    with command_errors("check tate-remark"):
        curve = WeierstrassCurve(1 - c, -b, -b, 0, 0)
        rows = compare_tate_remark(n_max, b, c)

    general_failures = [row for row in rows if row.formula == "general" and not row.agrees]
    if as_json:
        emit_json(envelope("check tate-remark", curve, rows=[row.to_dict() for row in rows]))
    else:
        table = Table(title=f"Printed sums for {curve.describe()}")
        table.add_column("n", justify="right")
        table.add_column("Formula")
        table.add_column("Printed", justify="right")
        table.add_column("b(n)", justify="right")
        table.add_column("Agrees")
        for row in rows:
            table.add_row(
                str(row.n), row.formula, str(row.printed), str(row.expected),
                "[green]yes[/green]" if row.agrees else "[yellow]no[/yellow]",
            )
        console.print(table)
    if general_failures:
        raise typer.Exit(EXIT_FAILURE)
