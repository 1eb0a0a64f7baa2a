"""Text and JSON serialization of exact matrices.

Text format::

    rows cols
    e11 e12 ...
    ...

with every entry written as ``p`` or ``p/q`` in lowest terms.  JSON format is
``{"rows": r, "cols": c, "entries": [["p/q", ...], ...]}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .linalg import Matrix


class FormatError(ValueError):
    pass


def _parse_entry(token: Any) -> Fraction:
    try:
        if isinstance(token, bool):
            raise TypeError
        if isinstance(token, int):
            return Fraction(token)
        if isinstance(token, str):
            if "." in token or "e" in token.lower():
                raise ValueError
            return Fraction(token)
    except (ValueError, TypeError, ZeroDivisionError):
        pass
    raise FormatError(f"bad matrix entry {token!r}; expected p or p/q")


def dumps_text(a: Matrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    lines.extend(" ".join(str(x) for x in a.row(i)) for i in range(a.rows))
    return "\n".join(lines) + "\n"


def loads_text(text: str) -> Matrix:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise FormatError(f"bad header {lines[0]!r}; expected 'rows cols'")
    rows, cols = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != rows:
        raise FormatError(f"expected {rows} rows, found {len(body)}")
    entries = []
    for ln in body:
        tokens = ln.split()
        if len(tokens) != cols:
            raise FormatError(f"expected {cols} entries in row {ln!r}")
        entries.extend(_parse_entry(t) for t in tokens)
    return Matrix(rows, cols, entries)


def to_json_obj(a: Matrix) -> dict[str, Any]:
    return {"rows": a.rows, "cols": a.cols, "entries": [[str(x) for x in a.row(i)] for i in range(a.rows)]}


def from_json_obj(obj: Any) -> Matrix:
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (KeyError, TypeError) as exc:
        raise FormatError("JSON matrix needs rows, cols and entries") from exc
    if not isinstance(rows, int) or not isinstance(cols, int) or len(entries) != rows:
        raise FormatError("JSON matrix shape does not match its entries")
    flat = []
    for r in entries:
        if len(r) != cols:
            raise FormatError("JSON matrix row has the wrong length")
        flat.extend(_parse_entry(t) for t in r)
    return Matrix(rows, cols, flat)


def dumps_json(a: Matrix) -> str:
    return json.dumps(to_json_obj(a))


def loads_json(text: str) -> Matrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return from_json_obj(obj)


def loads(text: str) -> Matrix:
    """Parse either format, sniffing JSON by its leading brace."""
    return loads_json(text) if text.lstrip().startswith("{") else loads_text(text)
