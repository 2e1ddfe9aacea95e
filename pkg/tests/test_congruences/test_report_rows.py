"""
Tests for congruence report rows and their serialisation.
"""
import pytest

from formale.congruences.report import (
    CongruenceReport,
    divides,
    failures,
    inconsistent_flags,
    sort_reports,
    summarize,
)
from formale.utils.exceptions import CurveParseError

CURVE = (0, 0, 0, 1, 0)


@pytest.mark.parametrize("modulus,residual,expected", [
    (25, 925, True),
    (25, 926, False),
    (0, 0, True),
    (0, 3, False),
    (7, -14, True),
])
def test_divides(modulus, residual, expected):
    assert divides(modulus, residual) is expected


def test_unknown_statement():
    with pytest.raises(ValueError):
        CongruenceReport("Thm3", CURVE, 5, 1, 1, 5, 0)


def test_to_dict_uses_decimal_strings():
    report = CongruenceReport("Thm2", CURVE, 5, 5, 2, 25, 925)
    data = report.to_dict()
    assert data == {
        "statement": "Thm2",
        "curve": [0, 0, 0, 1, 0],
        "p": 5,
        "n": 5,
        "s": 2,
        "modulus": "25",
        "residual": "925",
        "pass": True,
    }


def test_optional_fields_serialised():
    report = CongruenceReport("Cor34-d", (0, 0, 1, 0, 0), 7, 7, 2, 49, 0, "with_a_power", note="condition")
    data = report.to_dict()
    assert data["variant"] == "with_a_power"
    assert data["note"] == "condition"


def test_from_dict_recomputes_pass_flag():
    row = CongruenceReport("Thm2", CURVE, 5, 1, 1, 5, 3).to_dict()
    row["pass"] = True
    restored = CongruenceReport.from_dict(row)
    assert not restored.passed
    assert inconsistent_flags([row]) == [row]


def test_from_dict_malformed():
    with pytest.raises(CurveParseError):
        CongruenceReport.from_dict({"statement": "Thm2", "curve": [0, 0, 0, 1, 0]})


def test_sort_and_summarize():
    reports = [
        CongruenceReport("Thm2", CURVE, 13, 1, 1, 13, 0),
        CongruenceReport("Cor33-b", CURVE, 5, 1, 1, 5, 1, "as_printed"),
        CongruenceReport("Thm2", CURVE, 5, 2, 1, 5, 0),
        CongruenceReport("Thm2", CURVE, 5, 1, 1, 5, 0),
        CongruenceReport("Cor33-b", CURVE, 5, 1, 1, 5, 0, "with_a_power"),
    ]
    ordered = sort_reports(reports)
    assert [(r.statement, r.p, r.n) for r in ordered] == [
        ("Cor33-b", 5, 1), ("Cor33-b", 5, 1), ("Thm2", 5, 1), ("Thm2", 5, 2), ("Thm2", 13, 1),
    ]
    assert ordered[0].variant == "as_printed"
    assert failures(reports) == [reports[1]]
    assert summarize(reports) == {
        "Cor33-b[as_printed]": {"pass": 0, "fail": 1},
        "Cor33-b[with_a_power]": {"pass": 1, "fail": 0},
        "Thm2": {"pass": 3, "fail": 0},
    }
