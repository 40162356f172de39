"""Deterministic CSV and JSON emission.

Identical inputs produce byte-identical outputs: floats are rendered in
a fixed lowercase scientific form, column order is fixed by the caller
and provenance entries keep insertion order.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

__all__ = ["format_float", "render_csv", "render_json", "emit"]


def format_float(x: float) -> str:
    """Render a float as 'd.dddddddddddde<exp>' with a compact exponent.

    Twelve fractional mantissa digits, lowercase 'e', no plus sign and no
    leading zeros in the exponent: 0.0 renders as '0.000000000000e0' and
    7e-10 as '7.000000000000e-10'.
    """
    mantissa, _, exponent = f"{x:.12e}".partition("e")
    sign = "-" if exponent.startswith("-") else ""
    digits = exponent.lstrip("+-").lstrip("0") or "0"
    return f"{mantissa}e{sign}{digits}"


def _render_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    text = str(value)
    if "," in text or "\n" in text:
        raise ValueError(f"cell value {text!r} would break the unquoted CSV layout")
    return text


def render_csv(columns: Iterable[str], rows: Iterable[tuple], provenance: dict) -> bytes:
    """Comment-prefixed provenance, fixed header, one line per row."""
    lines = [f"# {key} = {_render_cell(value)}" for key, value in provenance.items()]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_render_cell(value) for value in row))
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_json(columns: Iterable[str], rows: Iterable[tuple], provenance: dict) -> bytes:
    """Stable-order JSON document that parses back to the same payload."""
    payload = {
        "provenance": dict(provenance),
        "columns": list(columns),
        "rows": [list(row) for row in rows],
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def emit(columns: Iterable[str], rows: Iterable[tuple], provenance: dict, fmt: str) -> bytes:
    if fmt == "csv":
        return render_csv(columns, rows, provenance)
    if fmt == "json":
        return render_json(columns, rows, provenance)
    raise ValueError(f"unknown output format {fmt!r}")
