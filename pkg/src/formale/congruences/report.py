"""
Structured verdicts for congruence statements.

A report stores the exact left-hand side (the residual) and the modulus;
it passes iff the modulus divides the residual. Modulus 0 marks an exact
equality such as t_p = 0, since 0 divides r only for r = 0.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from ..utils.exceptions import CurveParseError

STATEMENTS = (
    "Thm2",
    "Cor1-good-a",
    "Cor1-good-b",
    "Cor1-good-c",
    "Cor1-mult-a",
    "Cor1-mult-b",
    "Cor1-additive",
    "Cor33-a",
    "Cor33-b",
    "Cor33-c",
    "Cor33-d",
    "Cor34-a",
    "Cor34-b",
    "Cor34-c",
    "Cor34-d",
    "Sec4-trace",
    "Remark-11",
)


def divides(modulus: int, residual: int) -> bool:
    if modulus == 0:
        return residual == 0
    return residual % modulus == 0


@dataclass(frozen=True)
class CongruenceReport:
    statement: str
    curve: Tuple[int, int, int, int, int]
    p: int
    n: int
    s: int
    modulus: int
    residual: int
    variant: Optional[str] = None
    note: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.statement not in STATEMENTS:
            raise ValueError(f"unknown statement id {self.statement!r}")
        object.__setattr__(self, "curve", tuple(self.curve))

    @property
    def passed(self) -> bool:
        return divides(self.modulus, self.residual)

    @property
    def sort_key(self) -> Tuple[str, int, int, int, str]:
        return (self.statement, self.p, self.n, self.s, self.variant or "")

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "statement": self.statement,
            "curve": list(self.curve),
            "p": self.p,
            "n": self.n,
            "s": self.s,
            "modulus": str(self.modulus),
            "residual": str(self.residual),
            "pass": self.passed,
        }
        if self.variant is not None:
            data["variant"] = self.variant
        if self.note is not None:
            data["note"] = self.note
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CongruenceReport":
        """
        Rebuild a report; the pass flag is recomputed, never trusted.

        Raises:
            CurveParseError: if a field is missing or malformed
        """
        try:
            return cls(
                statement=data["statement"],
                curve=tuple(int(a) for a in data["curve"]),  # type: ignore[arg-type]
                p=int(data["p"]),
                n=int(data["n"]),
                s=int(data["s"]),
                modulus=int(data["modulus"]),
                residual=int(data["residual"]),
                variant=data.get("variant"),
                note=data.get("note"),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise CurveParseError(f"malformed congruence report: {e}") from e


def sort_reports(reports: Iterable[CongruenceReport]) -> List[CongruenceReport]:
    return sorted(reports, key=lambda report: report.sort_key)


def failures(reports: Iterable[CongruenceReport]) -> List[CongruenceReport]:
    return [report for report in reports if not report.passed]


def inconsistent_flags(rows: Iterable[Dict[str, Any]]) -> List[Dict[str, Any]]:
    """Serialised rows whose stored pass flag differs from the recomputed one."""
    return [row for row in rows if CongruenceReport.from_dict(row).passed != row.get("pass")]


def summarize(reports: Iterable[CongruenceReport]) -> Dict[str, Dict[str, int]]:
    """Per statement (and variant) pass and fail counts."""
    summary: Dict[str, Dict[str, int]] = {}
    for report in reports:
        key = report.statement if report.variant is None else f"{report.statement}[{report.variant}]"
        counts = summary.setdefault(key, {"pass": 0, "fail": 0})
        counts["pass" if report.passed else "fail"] += 1
    return dict(sorted(summary.items()))
