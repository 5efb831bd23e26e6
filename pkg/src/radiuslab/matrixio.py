"""JSON matrix file format.

A matrix is stored as ``{"rows": n, "cols": m, "data": [[re, im], ...]}``
with ``data`` in row-major order; readers reject length mismatches and
non-finite entries.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import MatrixParseError
from .linalg import Matrix, as_matrix


def matrix_to_payload(S) -> dict:
    """The JSON-ready dict form of a matrix."""
    S = as_matrix(S)
    rows, cols = S.shape
    flat = S.reshape(-1)
    return {
        "rows": int(rows),
        "cols": int(cols),
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_payload(obj) -> Matrix:
    """Parse the dict form, validating shape and entry counts."""
    if not isinstance(obj, dict):
        raise MatrixParseError(f"expected an object, got {type(obj).__name__}")
    try:
        rows = int(obj["rows"])
        cols = int(obj["cols"])
        data = obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixParseError(f"missing or malformed field: {exc}") from exc
    if rows < 1 or cols < 1:
        raise MatrixParseError(f"rows and cols must be positive, got {rows} x {cols}")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise MatrixParseError(
            f"data length {len(data) if isinstance(data, list) else '?'} "
            f"does not match rows*cols = {rows * cols}"
        )
    entries = np.empty(rows * cols, dtype=np.complex128)
    for k, item in enumerate(data):
        if not (isinstance(item, (list, tuple)) and len(item) == 2):
            raise MatrixParseError(f"entry {k} is not a [re, im] pair")
        try:
            entries[k] = complex(float(item[0]), float(item[1]))
        except (TypeError, ValueError) as exc:
            raise MatrixParseError(f"entry {k} is not numeric") from exc
    if not np.all(np.isfinite(entries)):
        raise MatrixParseError("matrix has non-finite entries")
    return entries.reshape(rows, cols)


def save_matrix(path, S) -> None:
    Path(path).write_text(json.dumps(matrix_to_payload(S)) + "\n")


def load_matrix(path) -> Matrix:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"invalid JSON in {path}: {exc}") from exc
    return matrix_from_payload(obj)
