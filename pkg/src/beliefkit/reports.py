"""Structured command reports, rendered as plain text or machine JSON.

A :class:`Report` is a kind tag plus an insertion-ordered payload of
JSON-compatible values: subsets as canonical brace strings, rationals as
exact ``p/q`` strings, simulation frequencies as floats already rounded to
six decimal places.  Rendering is deterministic; the machine form reparses
to exactly the in-memory payload.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

_TABLE_PREFIX = {
    "mass": "m",
    "belief": "Bel",
    "plausibility": "Pl",
    "prior": "prior",
    "likelihood": "likelihood",
    "posterior": "posterior",
    "uniform_posterior": "posterior",
    "frequency": "freq",
}


@dataclass(frozen=True)
class Report:
    kind: str
    payload: dict[str, object]


def _scalar(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def emit_report(report: Report, format: str = "text") -> str:
    """Render a report; `format` is ``text`` or ``machine``."""
    if format == "machine":
        doc: dict[str, object] = {"kind": report.kind, **report.payload}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines: list[str] = []
    for key, value in report.payload.items():
        if key == "findings":
            assert isinstance(value, list)
            if not value:
                lines.append("no findings")
            lines.extend(f"warning: {finding}" for finding in value)
        elif key == "pair":
            assert isinstance(value, (list, tuple)) and len(value) == 2
            lines.append(f"pair = {value[0]} vs {value[1]}")
        elif isinstance(value, Mapping):
            prefix = _TABLE_PREFIX[key]
            lines.extend(f"{prefix}({k}) = {_scalar(v)}" for k, v in value.items())
        else:
            lines.append(f"{key} = {_scalar(value)}")
    return "\n".join(lines) + "\n"
