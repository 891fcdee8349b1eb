"""Table verification results and their md / csv / json renderings."""
import json
import logging
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
import tabulate

LOGGER = logging.getLogger(__name__)

__all__ = ["TableRow", "TableReport", "render_reports", "FORMATS"]

MATCH = "match"
MISMATCH = "mismatch"
DATA_ONLY = "data-only"

FORMATS = ("md", "csv", "json")


def _plain(value: Any) -> Any:
    """Payload values as JSON-friendly scalars; Fractions and other exact numbers become strings."""
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    return str(value)


class TableRow:
    def __init__(self, table_id: str, key: str, computed: Optional[Dict[str, Any]] = None,
                 expected: Optional[Dict[str, Any]] = None, status: str = MATCH, reason: str = ""):
        self.table_id = table_id
        self.key = key
        self.computed = dict(computed or {})
        self.expected = dict(expected or {})
        self.status = status
        self.reason = reason

    def __repr__(self):
        return "TableRow({table}:{key} {status})".format(table=self.table_id, key=self.key, status=self.status)

    @staticmethod
    def compare(table_id: str, key: str, computed: Dict[str, Any], expected: Dict[str, Any],
                reason: str = "") -> 'TableRow':
        """Matches iff every expected field equals its computed value."""
        differing = sorted(field for field, value in expected.items() if computed.get(field) != value)
        if differing:
            LOGGER.warning("Table %s row %s differs on %s", table_id, key, ", ".join(differing))
            reason = reason or "differs on " + ", ".join(differing)
        return TableRow(table_id, key, computed, expected, MISMATCH if differing else MATCH, reason)

    @staticmethod
    def data_only(table_id: str, key: str, expected: Dict[str, Any], reason: str,
                  computed: Optional[Dict[str, Any]] = None) -> 'TableRow':
        if not reason:
            raise ValueError("data-only rows need a reason")
        return TableRow(table_id, key, computed, expected, DATA_ONLY, reason)

    def to_record(self) -> Dict[str, Any]:
        record = {"table": self.table_id, "row": self.key, "status": self.status, "reason": self.reason}
        for field, value in sorted(self.computed.items()):
            record["computed." + field] = _plain(value)
        for field, value in sorted(self.expected.items()):
            record["expected." + field] = _plain(value)
        return record


class TableReport:
    def __init__(self, table_id: str, title: str, rows: Sequence[TableRow] = ()):
        self.table_id = table_id
        self.title = title
        self.rows = list(rows)

    def __repr__(self):
        return "TableReport({table}: {summary})".format(table=self.table_id, summary=self.summary)

    def add(self, row: TableRow):
        self.rows.append(row)

    def count(self, status: str) -> int:
        return sum(1 for row in self.rows if row.status == status)

    @property
    def ok(self) -> bool:
        return not self.count(MISMATCH)

    @property
    def summary(self) -> str:
        text = "{matched}/{total} match".format(matched=self.count(MATCH), total=len(self.rows))
        data_only = self.count(DATA_ONLY)
        if data_only:
            text += ", {count} data-only".format(count=data_only)
        mismatches = self.count(MISMATCH)
        if mismatches:
            text += ", {count} mismatch".format(count=mismatches)
        return text

    def records(self) -> List[Dict[str, Any]]:
        return [row.to_record() for row in self.rows]

    def to_markdown(self) -> str:
        lines = ["## Table {table}: {title}".format(table=self.table_id, title=self.title), ""]
        records = self.records()
        if records:
            columns = _columns(records)
            lines.append(tabulate.tabulate([[_cell(record.get(column)) for column in columns] for record in records],
                                           headers=columns, tablefmt="pipe"))
            lines.append("")
        lines.append(self.summary)
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {"table": self.table_id, "title": self.title, "ok": self.ok, "summary": self.summary,
                "rows": self.records()}


def _columns(records: List[Dict[str, Any]]) -> List[str]:
    columns = []  # type: List[str]
    for record in records:
        columns.extend(column for column in record if column not in columns)
    return columns


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def render_reports(reports: Sequence[TableReport], output_format: str = "md") -> str:
    """Deterministic rendering of the reports in the given order."""
    if output_format == "md":
        return "\n\n".join(report.to_markdown() for report in reports) + "\n"
    if output_format == "json":
        return json.dumps([report.to_dict() for report in reports], sort_keys=True, indent=2) + "\n"
    if output_format == "csv":
        records = [record for report in reports for record in report.records()]
        columns = _columns(records)
        frame = pd.DataFrame([[_cell(record.get(column)) for column in columns] for record in records],
                             columns=columns)
        return frame.to_csv(index=False)
    raise ValueError("Unknown output format {fmt}".format(fmt=output_format))
