"""
Validation utilities for orders, bounds and user supplied coefficient data.
"""
import json
from pathlib import Path
from typing import List, Sequence, Union

from .exceptions import CurveParseError, ValidationError


def validate_order(order: int, minimum: int = 1, what: str = "order") -> int:
    """
    Validate a truncation order.

    Args:
        order: Requested order N
        minimum: Smallest order the caller can work with
        what: Name used in the error message

    Returns:
        The order, unchanged

    Raises:
        ValidationError: If the order is not an integer or is below the minimum
    """
    if isinstance(order, bool) or not isinstance(order, int):
        raise ValidationError(f"{what} must be an integer, got {order!r}")
    if order < minimum:
        raise ValidationError(f"{what} must be at least {minimum}, got {order}")
    return order


def validate_bound(value: int, what: str) -> int:
    """Validate a positive bound such as p_max, n_max or s_max."""
    return validate_order(value, minimum=1, what=what)


def validate_variant(variant: str) -> str:
    """
    Normalise a corollary variant name.

    Accepts the CLI spellings ``printed`` and ``a-power`` as well as the
    library names ``as_printed`` and ``with_a_power``.

    Raises:
        ValidationError: If the name is not a known variant
    """
    aliases = {
        "printed": "as_printed",
        "as_printed": "as_printed",
        "a-power": "with_a_power",
        "with_a_power": "with_a_power",
    }
    try:
        return aliases[variant.strip().lower()]
    except KeyError:
        raise ValidationError(
            f"Invalid variant: {variant}. Expected one of: printed, a-power"
        ) from None


def parse_integer_list(text: str) -> List[int]:
    """
    Parse a JSON array of integers or decimal strings.

    Raises:
        CurveParseError: If the text is not such an array
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise CurveParseError(f"Invalid JSON: {str(e)}") from e
    return validate_integer_sequence(raw)


def validate_integer_sequence(raw: object) -> List[int]:
    if not isinstance(raw, list) or not raw:
        raise CurveParseError("expected a non-empty JSON array of integers")
    values: List[int] = []
    for index, item in enumerate(raw):
        if isinstance(item, bool):
            raise CurveParseError(f"entry {index} is a boolean")
        if isinstance(item, int):
            values.append(item)
        elif isinstance(item, str) and item.strip().lstrip("-").isdigit():
            values.append(int(item))
        else:
            raise CurveParseError(f"entry {index} is not an integer: {item!r}")
    return values


def load_integer_file(path: Union[str, Path]) -> List[int]:
    """Read a JSON integer array from a file."""
    file_path = Path(path)
    if not file_path.exists():
        raise ValidationError(f"File not found: {file_path}")
    return parse_integer_list(file_path.read_text(encoding="utf-8"))


def decimal_strings(values: Sequence[int]) -> List[str]:
    """Integers as decimal strings; JSON consumers may lack big integers."""
    return [str(int(v)) for v in values]
