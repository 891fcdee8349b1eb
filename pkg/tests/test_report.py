import json
from fractions import Fraction

import pytest

from contactgrad.core.report import DATA_ONLY, MATCH, MISMATCH, TableReport, TableRow, render_reports


def _report():
    report = TableReport("x", "Example")
    report.add(TableRow.compare("x", "a", {"dim": 3, "ratio": Fraction(1, 2)}, {"dim": 3}))
    report.add(TableRow.compare("x", "b", {"dim": 4}, {"dim": 5}))
    report.add(TableRow.data_only("x", "c", {"dim": 52}, "above cap"))
    return report


def test_compare():
    row = TableRow.compare("x", "a", {"dim": 3, "extra": True}, {"dim": 3})
    assert row.status == MATCH and row.reason == ""
    row = TableRow.compare("x", "b", {"dim": 4, "depth": 2}, {"dim": 5, "depth": 2})
    assert row.status == MISMATCH
    assert row.reason == "differs on dim"
    assert TableRow.compare("x", "c", {}, {"dim": 1}, "missing").reason == "missing"


def test_data_only_needs_a_reason():
    assert TableRow.data_only("x", "a", {"dim": 1}, "outside grid").status == DATA_ONLY
    with pytest.raises(ValueError):
        TableRow.data_only("x", "a", {"dim": 1}, "")


def test_summary():
    report = _report()
    assert report.summary == "1/3 match, 1 data-only, 1 mismatch"
    assert not report.ok
    assert TableReport("y", "Empty").summary == "0/0 match"


def test_records_are_plain():
    record = _report().rows[0].to_record()
    assert record["computed.ratio"] == "1/2"
    assert record["expected.dim"] == 3
    assert record["status"] == MATCH


def test_markdown():
    text = render_reports([_report()], "md")
    lines = text.splitlines()
    assert lines[0] == "## Table x: Example"
    assert lines[2].startswith("| table")
    assert lines[-1] == "1/3 match, 1 data-only, 1 mismatch"


def test_json_and_csv():
    content = json.loads(render_reports([_report()], "json"))
    assert content[0]["table"] == "x" and not content[0]["ok"]
    assert [row["row"] for row in content[0]["rows"]] == ["a", "b", "c"]
    csv = render_reports([_report()], "csv").splitlines()
    assert csv[0].startswith("table,row,status,reason")
    assert len(csv) == 4


def test_unknown_format():
    with pytest.raises(ValueError):
        render_reports([_report()], "xml")
