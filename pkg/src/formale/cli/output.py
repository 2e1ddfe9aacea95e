"""
Shared plumbing for the commands: curve parsing, the trace cache, the JSON
envelope, rich tables and the exception to exit code mapping.
"""
import json
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterator, List, NoReturn, Optional, Sequence

import typer
from rich.console import Console
from rich.table import Table

from ..congruences.report import CongruenceReport, failures, summarize
from ..curves.reduction import LocalData
from ..curves.weierstrass import WeierstrassCurve, parse_curve
from ..utils.caching import TraceCache, clear_cache
from ..utils.exceptions import (
    CacheError,
    CurveParseError,
    FormaleError,
    InsufficientOrder,
    SingularCurveError,
    ValidationError,
)
from ..utils.logging import get_logger

logger = get_logger(__name__)
console = Console()

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID_CURVE = 2
EXIT_PARSE_ERROR = 3
EXIT_INSUFFICIENT_ORDER = 4


def exit_code_for(error: Exception) -> int:
    if isinstance(error, (SingularCurveError, ValidationError)):
        return EXIT_INVALID_CURVE
    if isinstance(error, CurveParseError):
        return EXIT_PARSE_ERROR
    if isinstance(error, InsufficientOrder):
        return EXIT_INSUFFICIENT_ORDER
    return EXIT_FAILURE


def fail(error: Exception, action: str) -> NoReturn:
    """Log, print in red and exit with the code for ``error``."""
    logger.error(f"Failed to {action}: {str(error)}")
    console.print(f"[red]Error:[/red] {str(error)}")
    raise typer.Exit(exit_code_for(error))


@contextmanager
def command_errors(action: str) -> Iterator[None]:
    """Turn library errors raised inside the block into exit codes."""
    try:
        yield
    except typer.Exit:
        raise
    except FormaleError as e:
        fail(e, action)


def load_curve(text: str) -> WeierstrassCurve:
    return parse_curve(text)


@contextmanager
def trace_cache(path: Optional[Path], fresh: bool = False) -> Iterator[Optional[TraceCache]]:
    """
    A loaded TraceCache for ``path``, saved when the block completes.
    Without a path no cache is used; ``fresh`` deletes the file first.
    """
    if path is None:
        yield None
        return
    if fresh:
        clear_cache(path)
    cache = TraceCache(path)
    try:
        cache.load()
    except CacheError as e:
        logger.warning(f"Ignoring unreadable trace cache: {str(e)}")
    yield cache
    cache.save()


def envelope(command: str, curve: Optional[WeierstrassCurve], **payload: Any) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "command": command,
        "curve": list(curve.coefficients) if curve is not None else None,
    }
    data.update(payload)
    return data


def emit_json(data: Dict[str, Any]) -> None:
    typer.echo(json.dumps(data, indent=2))


def local_data_row(data: LocalData) -> Dict[str, Any]:
    return {
        "p": data.p,
        "type": data.reduction.value,
        "A_p": data.a_p,
        "t": data.t_p,
        "u": data.u_p,
    }


def local_data_table(rows: Sequence[LocalData], title: str) -> Table:
    table = Table(title=title)
    table.add_column("p", justify="right")
    table.add_column("Reduction")
    table.add_column("A_p", justify="right")
    table.add_column("t_p", justify="right")
    table.add_column("u_p", justify="right")
    for data in rows:
        table.add_row(
            str(data.p),
            data.reduction.value,
            "-" if data.a_p is None else str(data.a_p),
            str(data.t_p),
            str(data.u_p),
        )
    return table


def reports_table(reports: Sequence[CongruenceReport], title: str) -> Table:
    table = Table(title=title)
    table.add_column("Statement")
    table.add_column("Variant")
    table.add_column("p", justify="right")
    table.add_column("n", justify="right")
    table.add_column("s", justify="right")
    table.add_column("Modulus", justify="right")
    table.add_column("Residual", justify="right")
    table.add_column("Result")
    for report in reports:
        table.add_row(
            report.statement,
            report.variant or "",
            str(report.p),
            str(report.n),
            str(report.s),
            "exact" if report.modulus == 0 else str(report.modulus),
            str(report.residual),
            "[green]pass[/green]" if report.passed else "[red]FAIL[/red]",
        )
    return table


def emit_reports(
    command: str,
    curve: Optional[WeierstrassCurve],
    reports: List[CongruenceReport],
    as_json: bool,
) -> None:
    """
    Print the reports and exit 1 when any of them failed.
    """
    failed = failures(reports)
    if as_json:
        emit_json(envelope(
            command,
            curve,
            summary=summarize(reports),
            reports=[report.to_dict() for report in reports],
        ))
    else:
        console.print(reports_table(reports, f"{command} {curve or ''}".strip()))
        notes = sorted({report.note for report in reports if report.note})
        for note in notes:
            console.print(f"[yellow]Note:[/yellow] {note}")
        if failed:
            console.print(f"[red]{len(failed)} of {len(reports)} congruences failed[/red]")
        else:
            console.print(f"[green]All {len(reports)} congruences hold[/green]")
    if failed:
        raise typer.Exit(EXIT_FAILURE)
