# coding=utf-8
# Copyright (c) dppf contributors
"""
Machine-readable output: one compact JSON object per line.

Exact rationals are written as ``"num/den"`` and cyclotomic numbers as ``{"m": m, "coeffs": [...]}``. Only the
fields in ``NUMERIC_FIELDS`` are decoded back to numbers. Parsing a record and rendering it again gives back the same
line.
"""
from __future__ import annotations

import json
import re
from typing import Any

from dppf.cyclo import CycloNum
from dppf.utils import RecordEncoder, parse_rational

_RATIONAL = re.compile(r"^-?\d+/\d+$")

NUMERIC_FIELDS = frozenset({"species", "coefficient", "expected", "computed"})


def render_record(record: dict[str, Any]) -> str:
    return json.dumps(record, cls=RecordEncoder, sort_keys=True, separators=(",", ":"))


def _decode(value: Any, numeric: bool = False) -> Any:
    if isinstance(value, list):
        return [_decode(v, numeric) for v in value]
    if isinstance(value, dict):
        if numeric and set(value) == {"m", "coeffs"}:
            return CycloNum(value["m"], [parse_rational(c) for c in value["coeffs"]])
        return {k: _decode(v, k in NUMERIC_FIELDS) for k, v in value.items()}
    if numeric and isinstance(value, str) and _RATIONAL.match(value):
        return parse_rational(value)
    return value


def parse_record(line: str) -> dict[str, Any]:
    """
    Decode a line written by :func:`render_record`.

    Raises
    ------
    ValueError
        If the line is not a JSON object.
    """
    data = json.loads(line)
    if not isinstance(data, dict):
        raise ValueError(f"a record must be a JSON object, got {type(data).__name__}.")
    return _decode(data)
