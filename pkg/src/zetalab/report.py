"""Deterministic report serialisation: JSON, CSV and plain-text tables."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .complex_bilinear import ExactComplex

SCHEMA_VERSION = 1


def fmt_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    if x == 0.0:
        return "0.0"
    text = format(x, ".17g")
    if "e" not in text and "." not in text and "inf" not in text:
        text += ".0"
    return text


def plain(value: Any) -> Any:
    """Reduce numbers and containers to JSON-ready Python values.

    Complex numbers become ``{"re": .., "im": ..}``; exact Gaussian rationals
    are written as strings so nothing is lost.
    """
    if isinstance(value, (bool, type(None), str)):
        return value
    if isinstance(value, ExactComplex):
        return {"exact": str(value), "re": float(value.re), "im": float(value.im)}
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return float(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        z = complex(value)
        return {"re": z.real, "im": z.imag}
    if isinstance(value, Mapping):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if hasattr(value, "to_dict"):
        return plain(value.to_dict())
    raise TypeError(f"cannot serialise {type(value).__name__}")


def dumps(value: Any, indent: int = 2) -> str:
    """JSON text with insertion-ordered keys and 17-significant-digit floats."""
    return _dump(plain(value), indent, 0) + "\n"


def _dump(v: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if v is None:
        return "null"
    if v is True:
        return "true"
    if v is False:
        return "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return fmt_float(v)
    if isinstance(v, str):
        return _json_str(v)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{pad}{_json_str(k)}: {_dump(x, indent, level + 1)}" for k, x in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(v, list):
        if not v:
            return "[]"
        if all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v):
            return "[" + ", ".join(_dump(x, indent, level + 1) for x in v) + "]"
        items = [pad + _dump(x, indent, level + 1) for x in v]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(type(v).__name__)


def _json_str(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    if isinstance(v, (complex, np.complexfloating)):
        z = complex(v)
        return f"{format(z.real, '.17g')}{'+' if z.imag >= 0 or math.isnan(z.imag) else '-'}{format(abs(z.imag), '.17g')}j"
    return str(v)


def to_csv(rows: Sequence[Mapping[str, Any]], columns: Sequence[str] | None = None) -> str:
    """CSV with '.' decimals regardless of locale; complex cells as ``a+bj``."""
    buf = io.StringIO()
    if not rows:
        return ""
    columns = list(columns or rows[0].keys())
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row.get(c, "")) for c in columns])
    return buf.getvalue()


def to_table(rows: Sequence[Mapping[str, Any]], columns: Sequence[str] | None = None) -> str:
    if not rows:
        return "(no rows)\n"
    columns = list(columns or rows[0].keys())

    def short(v):
        if isinstance(v, (float, np.floating)):
            return f"{float(v):.10g}"
        if isinstance(v, (complex, np.complexfloating)):
            z = complex(v)
            return f"{z.real:.8g}{'+' if z.imag >= 0 else '-'}{abs(z.imag):.8g}i"
        return str(v)

    cells = [[short(r.get(c, "")) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temp file in the target directory, then rename over ``path``."""
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def columns_of(rows: Iterable[Mapping[str, Any]]) -> list[str]:
    seen: dict[str, None] = {}
    for r in rows:
        for k in r:
            seen.setdefault(k, None)
    return list(seen)
