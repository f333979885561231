# -*- coding: utf-8 -*-
"""CSV output for sweep rows.

Header: [series,] <variable>, then <method>_capacity,<method>_err pairs.
Numbers carry 9 significant digits; a failed cell holds ERR.
"""

from __future__ import annotations

import csv
import io
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Union

from core.errors import OutputError, SweepValidationError
from core.sweep.spec import SweepRow

ERROR_MARKER = "ERR"

Destination = Union[str, Path, TextIO, None]


def _fmt(value: float) -> str:
    return format(float(value), ".9g")


def header(rows: Sequence[SweepRow]) -> List[str]:
    first = rows[0]
    cols = ["series"] if any(r.series for r in rows) else []
    cols.append(first.variable)
    for method in first.methods:
        cols += [f"{method}_capacity", f"{method}_err"]
    return cols


def _records(rows: Sequence[SweepRow]) -> List[List[str]]:
    multi = any(r.series for r in rows)
    out = [header(rows)]
    for row in rows:
        rec = [row.series] if multi else []
        rec.append(_fmt(row.value))
        for method in row.methods:
            if method in row.results:
                cap, err = row.results[method]
                rec += [_fmt(cap), _fmt(err)]
            else:
                rec += [ERROR_MARKER, ERROR_MARKER]
        out.append(rec)
    return out


def render_csv(rows: Sequence[SweepRow]) -> str:
    if not rows:
        raise SweepValidationError("no rows to write")
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(_records(rows))
    return buf.getvalue()


def emit_csv(rows: Sequence[SweepRow], destination: Destination = None) -> Optional[Path]:
    """Write rows to a path, an open text stream, or stdout (None)."""
    text = render_csv(rows)
    if destination is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None
    if not isinstance(destination, (str, Path)):
        destination.write(text)
        return None
    path = Path(destination).expanduser()
    try:
        with path.open("w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc
    return path
