"""Deterministic text / json / csv rendering of check reports.

A report is a dict with a ``title``, the ``claims`` being checked, a flat list
of ``records`` and an optional ``notes`` list. JSON output sorts keys; CSV
flattens each record, JSON-encoding any nested value, with columns in the
order of first appearance.
"""

import csv
import io
import json

FORMATS = ("text", "json", "csv")


def _cell(v):
    if isinstance(v, (list, dict, tuple)):
        return json.dumps(v, sort_keys=True)
    if v is None:
        return ""
    return str(v)


def _columns(records):
    cols = []
    for r in records:
        for key in r:
            if key not in cols:
                cols.append(key)
    return cols


def to_json(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def to_csv(report):
    records = report.get("records", [])
    cols = _columns(records)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in records:
        w.writerow([_cell(r.get(c)) for c in cols])
    return buf.getvalue()


def to_text(report):
    lines = [report["title"], "=" * len(report["title"])]
    for claim in report.get("claims", []):
        lines.append(f"claim: {claim}")
    records = report.get("records", [])
    if records:
        cols = _columns(records)
        rows = [[_cell(r.get(c)) for c in cols] for r in records]
        widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(cols)]
        lines.append("")
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for row in rows:
            lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    for note in report.get("notes", []):
        lines.append(f"note: {note}")
    if "status" in report:
        lines.append(f"status: {report['status']}")
    return "\n".join(lines) + "\n"


def render(report, fmt):
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown format {fmt!r}")
