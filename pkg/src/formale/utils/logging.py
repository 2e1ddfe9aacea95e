"""
Logging for formale.

Console records go to stderr through rich, so stdout carries only command
output (tables or JSON). Log files hold one JSON object per record unless
plain text is asked for.
"""
import json
import logging
from datetime import datetime
from enum import Enum
from fractions import Fraction
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from rich.console import Console
from rich.logging import RichHandler

ROOT_LOGGER = "formale"
CONSOLE_FORMAT = "%(name)s - %(message)s"
PLAIN_FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _field_value(value: Any) -> Any:
    """Map values that show up in formale records onto JSON types."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, (tuple, set, frozenset)):
        return [_field_value(v) for v in value]
    if isinstance(value, Path):
        return str(value)
    return value


class StructuredFormatter(logging.Formatter):
    """
    One JSON object per record. Extra fields are merged at top level.

    Integers are written in full, so a residual of any size can be read
    back exactly from the log.
    """

    def format(self, record: logging.LogRecord) -> str:
        payload: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        for key, value in getattr(record, "extra_fields", {}).items():
            payload[key] = _field_value(value)
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload, default=str)


def _resolve_level(log_level: Union[str, int]) -> int:
    if isinstance(log_level, int):
        return log_level
    level = logging.getLevelName(log_level.upper())
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level: {log_level}")
    return level


def _console_handler(level: int) -> logging.Handler:
    handler = RichHandler(
        console=Console(stderr=True),
        rich_tracebacks=True,
        markup=False,
        show_time=False,
        show_path=False,
    )
    handler.setFormatter(logging.Formatter(CONSOLE_FORMAT, datefmt=DATE_FORMAT))
    handler.setLevel(level)
    return handler


def _file_handler(path: Path, level: int, structured: bool, max_size: int, backup_count: int) -> logging.Handler:
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = RotatingFileHandler(path, maxBytes=max_size, backupCount=backup_count, encoding="utf-8")
    if structured:
        handler.setFormatter(StructuredFormatter())
    else:
        handler.setFormatter(logging.Formatter(PLAIN_FILE_FORMAT, datefmt=DATE_FORMAT))
    handler.setLevel(level)
    return handler


def setup_logging(
    log_level: Union[str, int] = "WARNING",
    log_file: Optional[Union[str, Path]] = None,
    max_size: int = 10 * 1024 * 1024,
    backup_count: int = 5,
    structured: bool = True,
    console: bool = True,
) -> None:
    """
    Configure the root handlers for a formale run.

    Args:
        log_level: level name or number; unknown names raise ValueError
        log_file: optional file, rotated at ``max_size`` bytes
        max_size: rotation threshold in bytes
        backup_count: rotated files kept
        structured: JSON records in the log file instead of plain lines
        console: also log to stderr
    """
    level = _resolve_level(log_level)

    handlers: List[logging.Handler] = []
    if console:
        handlers.append(_console_handler(level))
    if log_file:
        handlers.append(_file_handler(Path(log_file), level, structured, max_size, backup_count))

    logging.basicConfig(level=level, format="%(message)s", handlers=handlers, force=True)
    logging.getLogger(ROOT_LOGGER).setLevel(level)

    get_logger(__name__).debug(
        "Logging configured",
        **log_with_context(level=logging.getLevelName(level), log_file=log_file, structured=structured),
    )


def get_logger(name: str) -> logging.Logger:
    """Logger under the ``formale`` namespace; module names are prefixed when needed."""
    if name == ROOT_LOGGER or name.startswith(ROOT_LOGGER + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def log_with_context(**context: Any) -> Dict[str, Any]:
    """
    Keyword arguments for a stdlib logging call carrying structured fields.

    Usage:
        logger.warning("Congruence failed", **log_with_context(p=5, residual=r))
    """
    return {"extra": {"extra_fields": context}}
