"""Algebra file format and the element-expression grammar.

The on-disk format is JSON:

    {
      "dim": 8,
      "unit": 0,
      "constants": [[["0", "1/2", ...], ...], ...],
      "grading": {"even": [0, 1, 2, 3], "odd": [4, 5, 6, 7]},   # optional
      "labels": ["1", "e1", ...]                                 # optional
    }

Rationals are encoded as strings "p/q" or "p" so round trips are lossless.
Element expressions are linear combinations over the basis labels, e.g.
"f1 - f4", "2/3*e8 + 1", "e_8/2 + e8/2"; labels match case-insensitively
with underscores ignored.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .construct import Grading
from .core import Algebra, Element
from .errors import InvalidGradingError, MalformedInputError, NonUnitalError


def fraction_to_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fraction_from_json(value: Any) -> Fraction:
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInputError(f"bad rational literal {value!r}") from exc
    if isinstance(value, int):
        return Fraction(value)
    raise MalformedInputError(f"rationals must be strings or integers, got {value!r}")


def algebra_to_dict(
    algebra: Algebra, grading: Grading | None = None
) -> dict[str, Any]:
    n = algebra.dim
    out: dict[str, Any] = {
        "dim": n,
        "unit": algebra.unit,
        "constants": [
            [[fraction_to_str(c) for c in algebra.constants[i][j]] for j in range(n)]
            for i in range(n)
        ],
    }
    if algebra.labels is not None:
        out["labels"] = list(algebra.labels)
    if grading is not None:
        partition = grading.index_partition()
        if partition is None:
            raise MalformedInputError(
                "only basis-aligned gradings can be stored in the file format"
            )
        out["grading"] = {"even": partition[0], "odd": partition[1]}
    return out


def algebra_from_dict(data: dict[str, Any]) -> tuple[Algebra, Grading | None]:
    if not isinstance(data, dict):
        raise MalformedInputError("top-level JSON value must be an object")
    try:
        n = int(data["dim"])
        raw = data["constants"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError("missing or bad 'dim'/'constants'") from exc
    if len(raw) != n or any(len(row) != n for row in raw):
        raise MalformedInputError("constants tensor shape does not match dim")
    constants = [
        [[_fraction_from_json(c) for c in raw[i][j]] for j in range(n)]
        for i in range(n)
    ]
    unit = data.get("unit")
    if unit is not None:
        unit = int(unit)
    labels = data.get("labels")
    if labels is not None:
        labels = [str(x) for x in labels]
    try:
        algebra = Algebra(constants, unit=unit, labels=labels)
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from exc
    grading = None
    if "grading" in data and data["grading"] is not None:
        g = data["grading"]
        try:
            grading = Grading.from_indices(
                n, [int(i) for i in g["even"]], [int(i) for i in g.get("odd", [])]
            )
        except (KeyError, TypeError, ValueError, InvalidGradingError) as exc:
            raise MalformedInputError(f"bad grading block: {exc}") from exc
    return algebra, grading


def save_algebra(path: str, algebra: Algebra, grading: Grading | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra_to_dict(algebra, grading), fh, indent=1)
        fh.write("\n")


def load_algebra(path: str) -> tuple[Algebra, Grading | None]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON in {path}: {exc}") from exc
    return algebra_from_dict(data)


_TERM_RE = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)\*?)?(?P<label>[A-Za-z][A-Za-z0-9_]*)?(?:/(?P<div>\d+))?$"
)


def _normalize_label(label: str) -> str:
    return label.replace("_", "").lower()


def parse_element(expr: str, algebra: Algebra) -> Element:
    """Parse a linear combination of basis labels into an element."""
    compact = expr.replace(" ", "")
    if not compact:
        raise MalformedInputError("empty element expression")
    label_index = {
        _normalize_label(algebra.label(i)): i for i in range(algebra.dim)
    }
    coords = [Fraction(0)] * algebra.dim
    pos = 0
    sign = Fraction(1)
    if compact[0] in "+-":
        sign = Fraction(-1) if compact[0] == "-" else Fraction(1)
        pos = 1
    while pos <= len(compact):
        next_break = len(compact)
        for k in range(pos, len(compact)):
            if compact[k] in "+-" and compact[k - 1] not in "*/":
                next_break = k
                break
        chunk = compact[pos:next_break]
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coef") is None and m.group("label") is None):
            raise MalformedInputError(f"cannot parse term {chunk!r} in {expr!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("div"):
            div = int(m.group("div"))
            if div == 0:
                raise MalformedInputError("division by zero in element expression")
            coef /= div
        label = m.group("label")
        if label is None:
            if algebra.unit is None:
                raise NonUnitalError("scalar term in expression for a non-unital algebra")
            idx = algebra.unit
        else:
            idx = label_index.get(_normalize_label(label))
            if idx is None:
                raise MalformedInputError(f"unknown basis label {label!r}")
        coords[idx] += sign * coef
        if next_break >= len(compact):
            break
        sign = Fraction(-1) if compact[next_break] == "-" else Fraction(1)
        pos = next_break + 1
    return Element(tuple(coords))
