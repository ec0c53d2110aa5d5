"""JSON encodings for distributions, matrices, channels and results."""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import RSEntropyError, ShapeMismatch


def _load(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise RSEntropyError(f"{path}: invalid JSON ({exc})") from exc


def load_dist(path) -> list:
    data = _load(path)
    if not isinstance(data, list) or not all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in data
    ):
        raise RSEntropyError(f"{path}: expected a JSON array of numbers")
    return [float(x) for x in data]


def matrix_from_json(obj) -> np.ndarray:
    """Decode ``{"dim": n, "entries": [[re, im], ...]}``.

    Rectangular matrices (Kraus operators) use ``dim_rows`` and ``dim_cols``
    instead of ``dim``.
    """
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ShapeMismatch("matrix object needs an 'entries' field")
    if "dim" in obj:
        rows = cols = int(obj["dim"])
    else:
        rows, cols = int(obj["dim_rows"]), int(obj["dim_cols"])
    entries = obj["entries"]
    if rows < 1 or cols < 1 or len(entries) != rows * cols:
        raise ShapeMismatch(f"expected {rows * cols} entries, got {len(entries)}")
    try:
        flat = np.array([complex(float(re), float(im)) for re, im in entries])
    except (TypeError, ValueError) as exc:
        raise ShapeMismatch(f"entries must be [re, im] pairs ({exc})") from exc
    return flat.reshape(rows, cols)


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    entries = [[float(z.real), float(z.imag)] for z in m.ravel()]
    if m.shape[0] == m.shape[1]:
        return {"dim": m.shape[0], "entries": entries}
    return {"dim_rows": m.shape[0], "dim_cols": m.shape[1], "entries": entries}


def load_matrix(path) -> np.ndarray:
    return matrix_from_json(_load(path))


def load_channel_ops(path) -> list:
    data = _load(path)
    if not isinstance(data, dict) or "kraus" not in data:
        raise ShapeMismatch(f"{path}: channel object needs a 'kraus' list")
    ops = [matrix_from_json(k) for k in data["kraus"]]
    dim_in, dim_out = data.get("dim_in"), data.get("dim_out")
    for k in ops:
        if (dim_out is not None and k.shape[0] != dim_out) or (
            dim_in is not None and k.shape[1] != dim_in
        ):
            raise ShapeMismatch(f"Kraus shape {k.shape} disagrees with dim_in/dim_out")
    return ops


def channel_to_json(channel) -> dict:
    return {
        "dim_in": channel.dim_in,
        "dim_out": channel.dim_out,
        "kraus": [matrix_to_json(k) for k in channel.kraus_ops],
    }


def encode_number(x):
    """JSON-safe number; +inf becomes the string "inf"."""
    if x is None:
        return None
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return x


def decode_number(x) -> float:
    if isinstance(x, str):
        return float(x)
    return float(x)
