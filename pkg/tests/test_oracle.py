# Copyright (c) dppf contributors
"""Compare the closed-form species with the characteristic-2 Brauer quotient computation."""
import numpy as np
import pytest

from dppf._exceptions import GroupTooLargeError, StructureMismatchError
from dppf.groups import catalog_group
from dppf.pairs import enumerate_pairs
from dppf.ppring import MonomialSymbol, brauer_quotient_species_char2, species_of_monomial, trivial_symbol
from dppf.ppring.oracle import gf2_rank


class TestGF2Rank:
    @pytest.mark.parametrize(
        "matrix, rank",
        [
            (np.eye(3, dtype=np.uint8), 3),
            (np.ones((2, 2), dtype=np.uint8), 1),
            (np.zeros((3, 4), dtype=np.uint8), 0),
            (np.array([[1, 0, 1], [0, 1, 1], [1, 1, 0]], dtype=np.uint8), 2),
            (np.array([[2, 3]], dtype=np.uint8), 1),
        ],
    )
    def test_rank(self, matrix, rank):
        assert gf2_rank(matrix) == rank

    def test_empty(self):
        assert gf2_rank(np.zeros((0, 5), dtype=np.uint8)) == 0

    def test_input_untouched(self):
        matrix = np.array([[1, 1], [1, 0]], dtype=np.uint8)
        gf2_rank(matrix)
        assert matrix.tolist() == [[1, 1], [1, 0]]


class TestOracle:
    @pytest.mark.parametrize("name", ["C2", "C3", "C4", "C2xC2", "S3", "D8", "Q8"])
    def test_agrees_with_species(self, name):
        group = catalog_group(name)
        classes = enumerate_pairs(group, 2)
        for L in group.subgroups:
            symbol = trivial_symbol(group, L)
            for pair in classes:
                assert brauer_quotient_species_char2(symbol, pair) == species_of_monomial(symbol, pair)

    def test_needs_characteristic_two(self, s3):
        pair = enumerate_pairs(s3, 3)[0]
        with pytest.raises(StructureMismatchError, match="needs p = 2"):
            brauer_quotient_species_char2(trivial_symbol(s3, s3.whole), pair)

    def test_permutation_modules_only(self, s3):
        rotation_character = MonomialSymbol(s3, s3.subgroup([1]), 3, (0, 1, 2))
        with pytest.raises(StructureMismatchError, match="permutation modules"):
            brauer_quotient_species_char2(rotation_character, enumerate_pairs(s3, 2)[0])

    def test_group_bound(self, c3_c4):
        with pytest.raises(GroupTooLargeError):
            brauer_quotient_species_char2(trivial_symbol(c3_c4, c3_c4.whole), enumerate_pairs(c3_c4, 2)[0])
