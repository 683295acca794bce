# Copyright (c) dppf contributors
from fractions import Fraction

import pytest

from dppf.cyclo import CycloNum
from dppf.records import parse_record, render_record


class TestRecords:
    def test_compact_sorted_line(self):
        assert render_record({"p": 2, "kind": "s11", "agrees": True}) == '{"agrees":true,"kind":"s11","p":2}'

    def test_exact_values(self):
        record = {"kind": "composition", "species": [Fraction(0), Fraction(1, 2)], "group": "C3:C4"}
        line = render_record(record)
        parsed = parse_record(line)
        assert parsed["species"] == [0, Fraction(1, 2)]
        assert parsed["group"] == "C3:C4"
        assert render_record(parsed) == line

    def test_cyclotomic_values(self):
        line = render_record({"kind": "idempotent", "species": [CycloNum(4, [0, Fraction(-1, 3)])]})
        parsed = parse_record(line)
        assert parsed["species"][0] == CycloNum(4, [0, Fraction(-1, 3)])
        assert render_record(parsed) == line

    def test_nested(self):
        line = render_record({"kind": "pair", "reduction": {"order_P": 3, "order_s": 2}, "P": [0, 1, 3]})
        assert parse_record(line)["reduction"] == {"order_P": 3, "order_s": 2}

    @pytest.mark.parametrize("line", ["[1, 2]", "3", '"text"'])
    def test_not_an_object(self, line):
        with pytest.raises(ValueError, match="must be a JSON object"):
            parse_record(line)

    def test_text_fields_stay_text(self):
        line = render_record({"kind": "group", "group": "1/2", "species": ["1/2"]})
        parsed = parse_record(line)
        assert parsed["group"] == "1/2"
        assert parsed["species"] == [Fraction(1, 2)]
        assert render_record(parsed) == line
