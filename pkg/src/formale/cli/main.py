"""
Command line entry point: ``formale [global options] COMMAND ...``.
"""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from ..config.settings import get_config
from ..utils.exceptions import ConfigurationError
from ..utils.logging import get_logger, log_with_context, setup_logging
from .commands import check, expand, group_law, lseries, points

app = typer.Typer(
    help="formale - formal groups of elliptic curves over Q and their congruences",
    no_args_is_help=True,
)
console = Console(stderr=True)
logger = get_logger(__name__)

COMMANDS = (
    (expand.app, "expand", "Expand w(z) and the invariant differential"),
    (check.app, "check", "Check congruences between b(n), traces and L-series"),
    (points.app, "points", "Count points and classify reduction"),
    (lseries.app, "lseries", "Expand L-series coefficients"),
    (group_law.app, "group-law", "Build the formal group law"),
)
for sub_app, name, summary in COMMANDS:
    app.add_typer(sub_app, name=name, help=summary)


@app.callback()
def main(
    log_level: str = typer.Option(
        "WARNING",
        "--log-level",
        "-l",
        help="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)"
    ),
    log_file: Optional[Path] = typer.Option(
        None,
        "--log-file",
        "-f",
        help="Write JSON log records to this file"
    ),
    config_file: Optional[Path] = typer.Option(
        None,
        "--config",
        "-c",
        help="YAML file overriding the default settings"
    ),
) -> None:
    """
    formale - exact formal group computations for elliptic curves over Q.
    """
    try:
        setup_logging(log_level=log_level, log_file=log_file)
    except ValueError as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(1)

    try:
        settings = get_config()
        if config_file:
            settings.load_from_file(config_file)
    except ConfigurationError as e:
        logger.error(f"Invalid configuration: {e}")
        console.print(f"[red]Configuration error:[/red] {e}")
        raise typer.Exit(1)

    logger.debug(
        "Settings in effect",
        **log_with_context(
            default_order=settings.default_order,
            workers=settings.workers,
            cache_path=settings.cache_path,
        ),
    )


if __name__ == "__main__":
    app()
