# Copyright (c) dppf contributors
import json
import warnings
from fractions import Fraction
from typing import Any

import numpy as np


def format_rational(value: Fraction | int) -> str:
    """Render an exact rational as ``"num/den"``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


class RecordEncoder(json.JSONEncoder):
    """JSON encoder for output records: exact rationals, cyclotomic numbers and numpy scalars."""

    def default(self, obj: Any) -> Any:
        # Prevent circular import
        from dppf.cyclo import CycloNum

        if isinstance(obj, CycloNum):
            return {"m": obj.modulus, "coeffs": [format_rational(c) for c in obj.coeffs]}

        if isinstance(obj, Fraction):
            return format_rational(obj)

        if isinstance(obj, np.ndarray):
            if obj.size > 10e4:
                warnings.warn(
                    f"Trying to JSON serialize a very large array of size {obj.size}. "
                    "Consider doing this differently"
                )
            return obj.tolist()

        if isinstance(obj, np.integer):
            return int(obj)

        if isinstance(obj, np.bool_):
            return bool(obj)

        return json.JSONEncoder.default(self, obj)
