# cli/rendering.py
import csv
import io
import json
from typing import Iterable, Union

from apps.mds_checker.reports import CheckReport, jsonable
from apps.wps.types import TableRow
from common.exceptions import InputError

FORMATS = ("json", "csv", "md")
TABLE_HEADER = ("weights", "relation", "n")


def _csv(rows: Iterable[Iterable]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _md(header: Iterable[str], rows: Iterable[Iterable]) -> str:
    header = list(header)
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    lines += ["| " + " | ".join(str(cell) for cell in row) + " |" for row in rows]
    return "\n".join(lines)


def _witness(condition) -> str:
    return json.dumps(jsonable(condition.witness), separators=(",", ":"), sort_keys=True)


def render_report(report: CheckReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2)
    rows = [(c.id, "yes" if c.holds else "no", _witness(c)) for c in report.conditions]
    if fmt == "csv":
        return _csv([("kind", "verdict", "condition", "holds", "witness")]
                    + [(report.kind, report.verdict.value) + row for row in rows])
    title = f"**{report.kind}**: {report.verdict.value} ({report.branch})"
    return title + "\n\n" + _md(("condition", "holds", "witness"), rows)


def render_rows(rows: list[TableRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([row.to_dict() for row in rows], indent=2)
    cells = [row.cells() for row in rows]
    if fmt == "csv":
        return _csv([TABLE_HEADER] + cells)
    return _md(TABLE_HEADER, cells)


def render(obj: Union[CheckReport, Iterable[TableRow]], fmt: str = "json") -> str:
    if fmt not in FORMATS:
        raise InputError(f"unknown format {fmt!r}, expected one of {', '.join(FORMATS)}", token=fmt)
    if isinstance(obj, CheckReport):
        return render_report(obj, fmt)
    return render_rows(list(obj), fmt)
