"""Report containers and deterministic serialization.

Reports hold plottable data rows, pass/fail verdicts, and run metadata.
Serialization is bit-reproducible for identical configuration and seed:
floats are written with 17 significant digits (CSV) or shortest
round-trip repr (JSON), exact rationals as "p/q" strings, and JSON keys
are sorted.  Wall-clock time is deliberately not part of any report
payload; the CLI logs it to stderr instead.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

__all__ = [
    "ReportRow",
    "Verdict",
    "ExperimentReport",
    "format_value",
    "to_csv",
    "to_json",
    "all_passed",
    "load_schema",
]


@dataclass(frozen=True)
class ReportRow:
    """One plottable observation: a series label, an abscissa, a value."""

    label: str
    x: "int | float | str"
    value: "int | float | str | Fraction"


@dataclass(frozen=True)
class Verdict:
    """One named check.  For distributional checks the statistic and
    threshold come from the KS/ECF machinery; for exact checks the
    statistic is a mismatch count with threshold 0.5."""

    name: str
    statistic: float
    threshold: float
    n: int
    passed: bool
    pole_discards: int = 0


@dataclass
class ExperimentReport:
    experiment: str
    rows: list[ReportRow] = field(default_factory=list)
    verdicts: list[Verdict] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)


def format_value(v) -> str:
    """Canonical text form: rationals exact, floats at 17 significant
    digits, booleans lowercase."""
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if v != v or v in (float("inf"), float("-inf")):
            raise ValueError("non-finite value in report")
        return format(v, ".17g")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return v
    raise TypeError(f"unsupported report value type: {type(v).__name__}")


def to_csv(report: ExperimentReport) -> str:
    """Single-table CSV with header section,label,x,value.

    Metadata rows come first (sorted by key), then data rows in emission
    order, then verdict fields.  Quoting follows RFC 4180; lines end
    with bare LF for diff-friendliness.
    """
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["section", "label", "x", "value"])
    for key in sorted(report.metadata):
        w.writerow(["meta", key, "", format_value(report.metadata[key])])
    for row in report.rows:
        w.writerow(["row", row.label, format_value(row.x), format_value(row.value)])
    for v in report.verdicts:
        w.writerow(["verdict", v.name, "statistic", format_value(v.statistic)])
        w.writerow(["verdict", v.name, "threshold", format_value(v.threshold)])
        w.writerow(["verdict", v.name, "n", format_value(v.n)])
        w.writerow(["verdict", v.name, "passed", format_value(v.passed)])
        w.writerow(["verdict", v.name, "pole_discards", format_value(v.pole_discards)])
    return buf.getvalue()


def _json_value(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return v


def to_json(report: ExperimentReport) -> str:
    """UTF-8 JSON with sorted keys, matching the shipped schema."""
    doc = {
        "experiment": report.experiment,
        "metadata": {k: _json_value(v) for k, v in report.metadata.items()},
        "rows": [
            {"label": r.label, "x": _json_value(r.x), "value": _json_value(r.value)}
            for r in report.rows
        ],
        "verdicts": [
            {
                "name": v.name,
                "statistic": v.statistic,
                "threshold": v.threshold,
                "n": v.n,
                "passed": v.passed,
                "pole_discards": v.pole_discards,
            }
            for v in report.verdicts
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def all_passed(report: ExperimentReport) -> bool:
    return all(v.passed for v in report.verdicts)


def load_schema() -> dict:
    """The JSON schema shipped with the package."""
    text = resources.files("cauchy_angles").joinpath("report.schema.json").read_text("utf-8")
    return json.loads(text)
