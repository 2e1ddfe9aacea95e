"""
Command module for point counts, traces and reduction types.
"""
from pathlib import Path
from typing import Optional

import typer
from sympy import primerange

from ...arithmetic.points import local_data_sweep
from ...config.run import Command, OutputFormat, RunConfig
from ...config.settings import get_config
from ...utils.logging import get_logger
from ..output import command_errors, console, emit_json, envelope, load_curve, local_data_row, local_data_table, trace_cache

logger = get_logger(__name__)

app = typer.Typer()


@app.callback(invoke_without_command=True)
def points(
    curve: str = typer.Option(..., "--curve", help="Curve as [a1,a2,a3,a4,a6]"),
    p: Optional[int] = typer.Option(None, "--p", help="A single prime"),
    p_max: Optional[int] = typer.Option(None, "--p-max", help="Every prime up to this bound"),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of a table"),
    cache: Optional[Path] = typer.Option(None, "--cache", envvar="FORMALE_CACHE", help="Trace cache file"),
    clear_cache: bool = typer.Option(False, "--clear-cache", help="Delete the trace cache file before counting"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker threads"),
) -> None:
    """Reduction type, A_p, t_p and u_p at each prime."""
    settings = get_config()
    with command_errors("count points"):
        config = RunConfig(
            command=Command.POINTS,
            curve=load_curve(curve),
            p=p,
            p_max=p_max if p_max is not None or p is not None else settings.default_p_max,
            output=OutputFormat.JSON if as_json else OutputFormat.TEXT,
            cache_path=cache if cache is not None else settings.cache_path,
            workers=workers if workers is not None else settings.workers,
        )
        assert config.curve is not None
        primes = [config.p] if config.p is not None else list(primerange(2, (config.p_max or 1) + 1))
        with trace_cache(config.cache_path, fresh=clear_cache) as traces:
            rows = local_data_sweep(config.curve, primes, cache=traces, workers=config.workers)
        logger.debug(f"Computed local data at {len(rows)} primes")

    if config.json:
        emit_json(envelope(
            "points",
            config.curve,
            discriminant=str(config.curve.discriminant),
            local_data=[local_data_row(data) for data in rows],
        ))
    else:
        console.print(f"Discriminant: {config.curve.discriminant}")
        console.print(local_data_table(rows, f"Local data of {config.curve.describe()}"))
