# Copyright (c) dppf contributors
"""Test monomial symbols, species coordinates and the primitive idempotents."""
from fractions import Fraction

import pytest

from dppf._exceptions import PairError, StructureMismatchError
from dppf.groups import catalog_group
from dppf.pairs import Pair, enumerate_pairs
from dppf.ppring import (
    MonomialSymbol,
    SpeciesVector,
    TElement,
    deflation_constant,
    idempotent_v1,
    idempotent_v2,
    species_of_monomial,
    trivial_symbol,
)


class TestMonomialSymbol:
    def test_sign_character(self, s3):
        symbol = MonomialSymbol(s3, s3.subgroup([2]), 2, (0, 1))
        assert not symbol.is_trivial_character()
        assert symbol.value(2).exponent == 1

    def test_modulus_is_reduced(self, s3):
        assert MonomialSymbol(s3, s3.subgroup([2]), 4, (0, 2)) == MonomialSymbol(s3, s3.subgroup([2]), 2, (0, 1))
        assert MonomialSymbol(s3, s3.subgroup([2]), 2, (0, 0)).is_trivial_character()

    def test_not_a_homomorphism(self, s3):
        with pytest.raises(StructureMismatchError, match="not a homomorphism"):
            MonomialSymbol(s3, s3.subgroup([1]), 2, (0, 1, 1))

    def test_wrong_length(self, s3):
        with pytest.raises(StructureMismatchError, match="needs 3 values"):
            MonomialSymbol(s3, s3.subgroup([1]), 3, (0, 1))

    def test_p_character_rejected(self, s3):
        symbol = MonomialSymbol(s3, s3.subgroup([2]), 2, (0, 1))
        with pytest.raises(StructureMismatchError, match="not a 2'-character"):
            TElement.from_symbol(symbol, 2)


class TestSpecies:
    def test_c2_regular_and_trivial(self, c2):
        assert list(TElement.regular(c2, 2).species) == [2, 0]
        assert list(TElement.trivial(c2, 2).species) == [1, 1]
        assert TElement.zero(c2, 2).species.is_zero()

    def test_s3_permutation_modules(self, s3):
        rotations = TElement.from_symbol(trivial_symbol(s3, s3.subgroup([1])), 3)
        assert list(rotations.species) == [2, 0, 2, 0]
        line = TElement.from_symbol(trivial_symbol(s3, s3.subgroup([2])), 3)
        assert list(line.species) == [3, 1, 0, 0]

    def test_s3_sign_module(self, s3):
        sign = MonomialSymbol(s3, s3.subgroup([2]), 2, (0, 1))
        classes = enumerate_pairs(s3, 3)
        assert [species_of_monomial(sign, pair) for pair in classes] == [3, -1, 0, 0]

    def test_foreign_pair(self, s3, c2):
        with pytest.raises(StructureMismatchError, match="different groups"):
            species_of_monomial(trivial_symbol(s3, s3.whole), enumerate_pairs(c2, 2)[0])

    def test_ring_operations(self, s3):
        one = TElement.trivial(s3, 3)
        line = TElement.from_symbol(trivial_symbol(s3, s3.subgroup([2])), 3)
        assert line * one == line
        assert list((line * line).species) == [9, 1, 0, 0]
        assert (line - line).is_zero()
        assert list((2 * line).species) == [6, 2, 0, 0]

    def test_product_has_no_symbols(self, c2):
        product = TElement.regular(c2, 2) * TElement.regular(c2, 2)
        assert not product.has_symbols
        with pytest.raises(StructureMismatchError, match="symbols are unavailable"):
            product.terms

    def test_mixed_primes(self, s3):
        with pytest.raises(StructureMismatchError, match="different groups or primes"):
            TElement.trivial(s3, 2) + TElement.trivial(s3, 3)

    def test_vector_length(self, c2):
        with pytest.raises(StructureMismatchError, match="expected 2 species values"):
            SpeciesVector(enumerate_pairs(c2, 2), ())

    def test_rebuilt_classes_compare_equal(self, c2):
        first = enumerate_pairs(c2, 2)
        enumerate_pairs.cache_clear()
        second = enumerate_pairs(c2, 2)
        assert first is not second
        assert first == second
        assert SpeciesVector.indicator(first, [1]) == SpeciesVector.indicator(second, [1])
        assert idempotent_v1(first[1]).species == SpeciesVector.indicator(second, [1])
        assert first != enumerate_pairs(c2, 3)
        assert enumerate_pairs.cache_info().maxsize is not None


class TestIdempotents:
    def test_c2_free_idempotent(self, c2):
        classes = enumerate_pairs(c2, 2)
        e = idempotent_v1(classes[0])
        assert list(e.species) == [1, 0]
        assert e == TElement.regular(c2, 2).scale(Fraction(1, 2))

    def test_c2_trivial_idempotent(self, c2):
        classes = enumerate_pairs(c2, 2)
        e = idempotent_v1(classes[1])
        assert list(e.species) == [0, 1]
        assert e == TElement.trivial(c2, 2) - TElement.regular(c2, 2).scale(Fraction(1, 2))

    @pytest.mark.parametrize("name, p", [("S3", 3), ("S3", 2), ("C6", 2), ("C2xC2", 2), ("C4", 2)])
    def test_delta_property(self, name, p):
        classes = enumerate_pairs(catalog_group(name), p)
        for index, pair in enumerate(classes):
            assert idempotent_v1(pair).species == SpeciesVector.indicator(classes, [index])

    @pytest.mark.parametrize("name, p", [("S3", 3), ("C6", 2), ("C3", 2)])
    def test_formulas_agree(self, name, p):
        for pair in enumerate_pairs(catalog_group(name), p):
            assert idempotent_v1(pair) == idempotent_v2(pair)

    def test_sum_is_identity(self, s3):
        classes = enumerate_pairs(s3, 3)
        total = TElement.zero(s3, 3)
        for pair in classes:
            total = total + idempotent_v1(pair)
        assert total == TElement.trivial(s3, 3)

    def test_orthogonal(self, s3):
        classes = enumerate_pairs(s3, 3)
        first, second = idempotent_v1(classes[0]), idempotent_v1(classes[3])
        assert (first * second).is_zero()
        assert first * first == first


class TestDeflationConstant:
    def test_trivial_kernel(self, s3):
        assert deflation_constant(Pair(s3, s3.subgroup([1]), 2, 3), s3.trivial) == 1

    def test_pprime_kernel(self, c6):
        pair = Pair(c6, c6.subgroup([3]), 2, 2)
        assert deflation_constant(pair, c6.subgroup([2])) == Fraction(1, 3)

    def test_pair_must_span(self, s3):
        with pytest.raises(PairError, match="does not generate"):
            deflation_constant(Pair(s3, s3.subgroup([1]), 0, 3), s3.trivial)

    def test_kernel_must_be_normal(self, s3):
        with pytest.raises(PairError, match="not a normal subgroup"):
            deflation_constant(Pair(s3, s3.subgroup([1]), 2, 3), s3.subgroup([2]))
