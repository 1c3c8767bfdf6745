"""JSON encoding of matrices and reports.

A matrix is the object ``{"rows": N, "cols": M, "data": [[re, im], ...]}``
with ``data`` in row-major order. Floats are written with 17 significant
digits so that every value round-trips exactly; key order is whatever order
the caller built the mapping in, which keeps output byte-stable.
"""
import json
import math

import numpy as np

from .errors import DimensionError, PreconditionError

__all__ = ["matrix_to_json", "matrix_from_json", "dumps", "load_matrix", "load_matrix_list"]


def matrix_to_json(m):
    a = np.asarray(m, dtype=np.complex128)
    rows, cols = a.shape
    data = [[float(z.real), float(z.imag)] for z in a.ravel()]
    return {"rows": int(rows), "cols": int(cols), "data": data}


def matrix_from_json(obj):
    """Parse a matrix object, rejecting malformed or non-finite data."""
    if not isinstance(obj, dict):
        raise PreconditionError("matrix object must be a JSON object")
    try:
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    except KeyError as exc:
        raise PreconditionError(f"matrix object missing key {exc}") from None
    for name, value in (("rows", rows), ("cols", cols)):
        if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
            raise PreconditionError(f"{name} must be a positive integer, got {value!r}")
    if not isinstance(data, list) or len(data) != rows * cols:
        got = len(data) if isinstance(data, list) else type(data).__name__
        raise DimensionError(f"data must hold rows*cols = {rows * cols} entries, got {got}")
    out = np.empty(rows * cols, dtype=np.complex128)
    for k, pair in enumerate(data):
        if not isinstance(pair, list) or len(pair) != 2:
            raise PreconditionError(f"entry {k} is not a [re, im] pair")
        re, im = pair
        for part in (re, im):
            if isinstance(part, bool) or not isinstance(part, (int, float)) or not math.isfinite(part):
                raise PreconditionError(f"entry {k} has a non-finite or non-numeric part: {part!r}")
        out[k] = complex(re, im)
    return out.reshape(rows, cols)


def _format_float(x):
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    if x == 0:
        return "0.0"
    text = format(x, ".17g")
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def _encode(value, out):
    if value is None or isinstance(value, (bool, np.bool_)):
        out.append(json.dumps(None if value is None else bool(value)))
    elif isinstance(value, (int, np.integer)):
        out.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        out.append(_format_float(float(value)))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif isinstance(value, dict):
        out.append("{")
        for i, (key, item) in enumerate(value.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(key)))
            out.append(": ")
            _encode(item, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(", ")
            _encode(item, out)
        out.append("]")
    elif isinstance(value, np.ndarray) and value.ndim == 2:
        _encode(matrix_to_json(value), out)
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(value):
    """Deterministic JSON text with 17-significant-digit floats."""
    out = []
    _encode(value, out)
    return "".join(out)


def load_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return matrix_from_json(json.load(fh))


def load_matrix_list(path):
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    if not isinstance(obj, list):
        raise PreconditionError("expected a JSON list of matrix objects")
    return [matrix_from_json(item) for item in obj]
