"""JSON file formats for realizations and dynamical structure functions.

A realization document looks like::

    {"n": 2, "l": 0, "m": 1, "p": 1,
     "A": [["-1", "1/2"], ["0", "-3"]], "B": [["1"], ["0"]],
     "C": [["1", "0"]],
     "labels": {"u": ["u1"], "y": ["y1"]}}

Entries are strings (or integers) parsed as exact rationals; floats are
rejected.  Any of the nine matrices may be omitted, in which case it is zero.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .polyrat import RationalMatrix
from .qmatrix import QMatrix
from .realization import GeneralizedRealization, StateRealization

__all__ = [
    "MATRICES",
    "realization_from_dict",
    "realization_to_dict",
    "load_realization",
    "dump_realization",
    "dsf_to_dict",
    "format_document",
    "rational_matrix_to_rows",
]

MATRICES = ("A", "Ahat", "Abar", "Atil", "B", "Bbar", "C", "Cbar", "D")
_LABEL_KEYS = {"u": "input_labels", "x": "state_labels", "w": "aux_labels", "y": "output_labels"}


def _entry(x, where: str) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"{where}: {x!r} is not an exact rational; write it as a string")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: cannot parse {x!r}") from exc
    raise ParseError(f"{where}: unexpected entry {x!r}")


def _matrix(doc: dict, name: str, shape: tuple[int, int]) -> QMatrix:
    rows = doc.get(name)
    if rows is None or (rows == [] and 0 in shape):
        return QMatrix.zeros(*shape)
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ParseError(f"{name} must be a list of rows")
    data = [[_entry(x, f"{name}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(rows)]
    if len(data) != shape[0] or any(len(r) != shape[1] for r in data):
        got = (len(data), len(data[0]) if data else 0)
        raise ParseError(f"{name} is {got}, expected {shape}")
    return QMatrix(data, shape)


def realization_from_dict(doc: dict) -> GeneralizedRealization:
    try:
        n, l, m, p = (int(doc[k]) for k in ("n", "l", "m", "p"))
    except KeyError as exc:
        raise ParseError(f"missing dimension {exc.args[0]!r}") from exc
    shapes = {
        "A": (n, n), "Ahat": (n, l), "Abar": (l, n), "Atil": (l, l),
        "B": (n, m), "Bbar": (l, m), "C": (p, n), "Cbar": (p, l), "D": (p, m),
    }
    mats = {k: _matrix(doc, k, shapes[k]) for k in MATRICES}
    labels = doc.get("labels") or {}
    kw = {attr: tuple(labels[k]) for k, attr in _LABEL_KEYS.items() if k in labels}
    return GeneralizedRealization(**mats, **kw)


def _rows(M: QMatrix) -> list[list[str]]:
    return [[str(x) for x in r] for r in M.data]


def realization_to_dict(r: GeneralizedRealization | StateRealization, name: str | None = None) -> dict:
    if isinstance(r, StateRealization):
        r = r.as_generalized()
    doc = {}
    if name:
        doc["name"] = name
    doc.update(n=r.n, l=r.l, m=r.m, p=r.p)
    for k in MATRICES:
        M = getattr(r, k)
        if M.rows and M.cols:
            doc[k] = _rows(M)
    doc["labels"] = {k: list(getattr(r, attr)) for k, attr in _LABEL_KEYS.items()
                     if getattr(r, attr)}
    return doc


def load_realization(path) -> GeneralizedRealization:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return realization_from_dict(doc)


def format_document(doc: dict) -> str:
    """JSON with one matrix row per line; stable for identical input."""
    parts = []
    for key, value in doc.items():
        if isinstance(value, list) and value and all(isinstance(r, list) for r in value):
            rows = ",\n    ".join(json.dumps(r) for r in value)
            parts.append(f"  {json.dumps(key)}: [\n    {rows}\n  ]")
        else:
            parts.append(f"  {json.dumps(key)}: {json.dumps(value)}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def dump_realization(r, name: str | None = None) -> str:
    return format_document(realization_to_dict(r, name))


def rational_matrix_to_rows(M: RationalMatrix) -> list[list[str]]:
    return [[str(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]


def dsf_to_dict(d) -> dict:
    """``(Q, P)`` and the static blocks, rows in normal-form output order."""
    return {
        "p1": d.p1, "m": d.m, "p": d.p,
        "outputs": list(d.row_labels),
        "inputs": list(d.input_labels),
        "Q": rational_matrix_to_rows(d.Q),
        "P": rational_matrix_to_rows(d.P),
        "C2": _rows(d.C2),
        "D1": _rows(d.D1),
        "D2": _rows(d.D2),
    }
