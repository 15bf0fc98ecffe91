"""Matrix JSON format and JSON encoding of report objects.

A matrix is ``{"rows": n, "cols": m, "entries": [...]}`` with ``n*m``
row-major entries, each a number, a ``[re, im]`` pair, or an exact
rational string such as ``"-1/3"``.
"""

from __future__ import annotations

import dataclasses
import enum
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from .linalg import LinalgError, as_matrix


class MatrixFormatError(LinalgError):
    pass


def _parse_scalar(x: Any, where: str) -> complex:
    if isinstance(x, bool):
        raise MatrixFormatError(f"{where}: booleans are not matrix entries")
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, str):
        try:
            return complex(float(Fraction(x.strip())))
        except (ValueError, ZeroDivisionError) as exc:
            raise MatrixFormatError(f"{where}: bad rational {x!r}") from exc
    if isinstance(x, (list, tuple)) and len(x) == 2:
        re, im = (_parse_scalar(part, where).real for part in x)
        return complex(re, im)
    raise MatrixFormatError(f"{where}: unsupported entry {x!r}")


def matrix_from_json(obj: Any, name: str = "matrix") -> np.ndarray:
    if not isinstance(obj, dict):
        raise MatrixFormatError(f"{name}: expected an object with rows/cols/entries")
    try:
        rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFormatError(f"{name}: missing or invalid rows/cols/entries") from exc
    if rows < 0 or cols < 0:
        raise MatrixFormatError(f"{name}: negative dimension")
    if not isinstance(entries, list) or len(entries) != rows * cols:
        got = len(entries) if isinstance(entries, list) else type(entries).__name__
        raise MatrixFormatError(f"{name}: expected {rows * cols} entries, got {got}")
    vals = [_parse_scalar(e, f"{name}[{i}]") for i, e in enumerate(entries)]
    try:
        return as_matrix(np.array(vals, dtype=complex).reshape(rows, cols))
    except LinalgError as exc:
        raise MatrixFormatError(f"{name}: {exc}") from exc


def matrix_to_json(m) -> dict:
    a = as_matrix(m)
    entries: list = []
    for z in a.reshape(-1):
        re, im = float(z.real), float(z.imag)
        entries.append(re if im == 0.0 else [re, im])
    return {"rows": a.shape[0], "cols": a.shape[1], "entries": entries}


def load_matrix(path: str | Path) -> np.ndarray:
    path = Path(path)
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return matrix_from_json(obj, str(path))


def to_jsonable(obj: Any) -> Any:
    """Recursively convert report objects into JSON-compatible values."""
    if isinstance(obj, np.ndarray):
        return matrix_to_json(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, tuple) and hasattr(obj, "_asdict"):
        return {k: to_jsonable(v) for k, v in obj._asdict().items()}
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return obj


def dumps(obj: Any, **kw) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, **kw)
