# Copyright (c) dppf contributors

import json
from fractions import Fraction

import numpy as np
import pytest

from dppf.cyclo import CycloNum
from dppf.utils import RecordEncoder, format_rational, parse_rational


class TestRecordEncoder:
    def test_encode_numpy_array(self):
        arr = np.array([1, 2, 3, 4, 5])
        result = json.dumps(arr, cls=RecordEncoder)
        assert result == "[1, 2, 3, 4, 5]"

    def test_large_numpy_array_warning(self):
        large_arr = np.zeros(int(10e4 + 1))
        with pytest.warns(UserWarning, match=r"Trying to JSON serialize a very large array"):
            json.dumps(large_arr, cls=RecordEncoder)

    def test_encode_numpy_scalars(self):
        assert json.dumps(np.int64(42), cls=RecordEncoder) == "42"
        assert json.dumps(np.bool_(True), cls=RecordEncoder) == "true"

    def test_encode_fraction(self):
        assert json.dumps(Fraction(-1, 2), cls=RecordEncoder) == '"-1/2"'
        assert json.dumps(Fraction(3), cls=RecordEncoder) == '"3/1"'

    def test_encode_cyclotomic(self):
        value = CycloNum(3, [Fraction(1, 2), 1])
        assert json.loads(json.dumps(value, cls=RecordEncoder)) == {"m": 3, "coeffs": ["1/2", "1/1"]}

    def test_unhandled_data_type(self):
        with pytest.raises(TypeError, match=r"Object of type .* is not JSON serializable"):
            json.dumps({"key": object()}, cls=RecordEncoder)


class TestRationals:
    @pytest.mark.parametrize("text, value", [("1/2", Fraction(1, 2)), ("-3/4", Fraction(-3, 4)), ("5", Fraction(5))])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    def test_format(self):
        assert format_rational(Fraction(2, 4)) == "1/2"
        assert format_rational(7) == "7/1"
