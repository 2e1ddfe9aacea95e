"""
The validated record of one command line invocation.
"""
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional

from ..curves.weierstrass import WeierstrassCurve
from ..utils.exceptions import ValidationError
from ..utils.validation import validate_bound, validate_order


class Command(Enum):
    EXPAND = "expand"
    CHECK = "check"
    POINTS = "points"
    LSERIES = "lseries"
    GROUP_LAW = "group-law"


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a command needs besides its own subcommand arguments.

    Bounds that a command does not use stay None.
    """
    command: Command
    curve: Optional[WeierstrassCurve] = None
    order: Optional[int] = None
    p: Optional[int] = None
    p_max: Optional[int] = None
    n_max: Optional[int] = None
    s_max: Optional[int] = None
    output: OutputFormat = OutputFormat.TEXT
    cache_path: Optional[Path] = None
    assert_minimal: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if self.order is not None:
            validate_order(self.order, minimum=4)
        for name in ("p", "p_max", "n_max", "s_max"):
            value = getattr(self, name)
            if value is not None:
                validate_bound(value, name)
        if self.workers < 1:
            raise ValidationError(f"workers must be positive, got {self.workers}")

    @property
    def json(self) -> bool:
        return self.output is OutputFormat.JSON
