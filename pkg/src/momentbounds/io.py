"""Readers and writers for sample, matrix and polynomial inputs.

Each loader accepts either a path to a file or an inline literal, so the
worked examples fit on a command line.
"""

from __future__ import annotations

import csv
import io as _io
import json
import os
from fractions import Fraction
from typing import Any, List

from .errors import InputError
from .moments import Sample
from .span import Polynomial
from .spread import SquareMatrix


def _read_source(arg: str) -> tuple:
    """``(text, is_file)`` for a path or an inline literal."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read(), True
    return arg, False


def _json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid {what} JSON: {exc}") from None


def sample_from_dict(data: dict, renormalize: bool = False) -> Sample:
    if not isinstance(data, dict) or "points" not in data:
        raise InputError('sample JSON needs a "points" array')
    points = data["points"]
    weights = data.get("weights")
    interval = data.get("interval")
    if interval is not None and len(interval) != 2:
        raise InputError('"interval" must be [m, M]')
    try:
        return Sample.from_points(points, weights, interval, renormalize=renormalize)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad sample values: {exc}") from None


def sample_to_dict(sample: Sample) -> dict:
    return {
        "points": list(sample.points),
        "weights": list(sample.weights),
        "interval": list(sample.interval),
    }


def _sample_from_csv(text: str, renormalize: bool) -> Sample:
    points: List[float] = []
    weights: List[float] = []
    for row in csv.reader(_io.StringIO(text)):
        if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        try:
            x = float(row[0])
        except ValueError:
            if not points:
                continue  # header line
            raise InputError(f"bad CSV row {row!r}") from None
        points.append(x)
        if len(row) > 1 and row[1].strip():
            try:
                weights.append(float(row[1]))
            except ValueError:
                raise InputError(f"bad CSV weight in {row!r}") from None
    if weights and len(weights) != len(points):
        raise InputError("CSV rows must all carry a weight or none")
    return Sample.from_points(points, weights or None, renormalize=renormalize)


def load_sample(arg: str, renormalize: bool = False) -> Sample:
    """Sample from a ``.json``/``.csv`` file or an inline JSON object."""
    text, is_file = _read_source(arg)
    if is_file and arg.lower().endswith(".csv"):
        return _sample_from_csv(text, renormalize)
    return sample_from_dict(_json(text, "sample"), renormalize)


def _entry(value) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise InputError(f"complex entry must be [re, im], got {value!r}")
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, str):
        try:
            return complex(value.replace(" ", ""))
        except ValueError:
            raise InputError(f"bad matrix entry {value!r}") from None
    if isinstance(value, (int, float)):
        return complex(value)
    raise InputError(f"bad matrix entry {value!r}")


def matrix_from_data(data: Any) -> SquareMatrix:
    dim = None
    if isinstance(data, dict):
        if "entries" not in data:
            raise InputError('matrix JSON needs an "entries" array')
        dim = data.get("dim")
        data = data["entries"]
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError("matrix entries must be a list of rows")
    rows = [[_entry(v) for v in row] for row in data]
    if dim is not None and (len(rows) != dim or any(len(r) != dim for r in rows)):
        raise InputError(f"matrix does not match declared dim {dim}")
    if any(len(r) != len(rows) for r in rows):
        raise InputError("matrix must be square")
    return SquareMatrix(rows)


def matrix_to_dict(A: SquareMatrix) -> dict:
    entries = []
    for row in A.entries:
        entries.append(
            [float(z.real) if z.imag == 0 else [float(z.real), float(z.imag)] for z in row]
        )
    return {"dim": A.dim, "entries": entries}


def load_matrix(arg: str) -> SquareMatrix:
    """Matrix from a JSON file, inline JSON, or rows like ``"3,2,1;2,0,2;1,2,3"``."""
    text, _ = _read_source(arg)
    stripped = text.strip()
    if stripped.startswith(("[", "{")):
        return matrix_from_data(_json(stripped, "matrix"))
    rows = [r for r in stripped.split(";") if r.strip()]
    return matrix_from_data([[c.strip() for c in r.split(",")] for r in rows])


def polynomial_from_data(data: Any) -> Polynomial:
    if isinstance(data, dict):
        if "coefficients" not in data:
            raise InputError('polynomial JSON needs a "coefficients" array')
        data = data["coefficients"]
    if not isinstance(data, list) or not data:
        raise InputError("coefficients must be a non-empty list")
    try:
        return Polynomial(tuple(float(c) for c in data))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad coefficient: {exc}") from None


def load_polynomial(arg: str) -> Polynomial:
    """Polynomial from a JSON file, inline JSON, or ``"1,80,1500,5000,3750,0.2"``."""
    text, _ = _read_source(arg)
    stripped = text.strip()
    if stripped.startswith(("[", "{")):
        return polynomial_from_data(_json(stripped, "polynomial"))
    try:
        coeffs = [float(Fraction(c.strip())) for c in stripped.split(",") if c.strip()]
    except ValueError:
        raise InputError(f"bad polynomial literal {arg!r}") from None
    return polynomial_from_data(coeffs)
