# Copyright (c) dppf contributors
"""Test the biset operations against their closed-form predictions."""
from fractions import Fraction

import pytest

from dppf._exceptions import StructureMismatchError
from dppf.groups import DirectProduct, Subgroup, all_subgroups, catalog_group, quotient
from dppf.groups.catalog import cyclic_group
from dppf.groups.subgroups import normal_subgroups
from dppf.pairs import Pair, enumerate_pairs
from dppf.ppring import (
    TElement,
    deflation_bimodule_is_diagonal,
    deflation_rhs,
    idempotent_v1,
    induction_rhs,
    inflation_bimodule_is_diagonal,
    inflation_rhs,
    op_def,
    op_ind,
    op_inf,
    op_res,
    restriction_rhs,
    tensor_over,
    trivial_symbol,
)


def _cases(names, p):
    for name in names:
        group = catalog_group(name)
        for subgroup in all_subgroups(group, up_to_conjugacy=True):
            yield pytest.param(group, subgroup, p, id=f"{name}-{subgroup.order}")


class TestSymbolOperations:
    def test_restrict_regular(self, s3):
        rotations = s3.subgroup([1])
        assert list(op_res(rotations, TElement.regular(s3, 3)).species) == [6, 0]

    def test_restrict_trivial(self, s3):
        restricted = op_res(s3.subgroup([2]), TElement.trivial(s3, 3))
        assert restricted == TElement.trivial(restricted.ambient, 3)

    def test_induce_trivial(self, s3):
        rotations = s3.subgroup([1])
        local, _ = rotations.to_group()
        assert list(op_ind(rotations, TElement.trivial(local, 3)).species) == [2, 0, 2, 0]

    def test_inflate_trivial(self, s3):
        presentation = quotient(s3, s3.subgroup([1]))
        assert op_inf(presentation, TElement.trivial(presentation.quotient, 3)) == TElement.trivial(s3, 3)

    def test_deflate_regular(self, s3):
        presentation = quotient(s3, s3.subgroup([1]))
        assert list(op_def(presentation, TElement.regular(s3, 3)).species) == [2, 0]

    def test_foreign_subgroup(self, s3, c6):
        with pytest.raises(StructureMismatchError, match="not a subgroup"):
            op_res(c6.trivial, TElement.trivial(s3, 3))

    def test_species_only_element(self, s3):
        product = TElement.trivial(s3, 3) * TElement.trivial(s3, 3)
        with pytest.raises(StructureMismatchError, match="monomial symbols"):
            op_res(s3.trivial, product)


class TestClosedForms:
    @pytest.mark.parametrize("group, subgroup, p", [*_cases(["S3", "C6"], 2), *_cases(["S3", "C3:C4"], 3)])
    def test_restriction(self, group, subgroup, p):
        for pair in enumerate_pairs(group, p):
            assert op_res(subgroup, idempotent_v1(pair)).species == restriction_rhs(subgroup, pair)

    @pytest.mark.parametrize("group, subgroup, p", [*_cases(["S3", "C2xC2"], 2), *_cases(["S3"], 3)])
    def test_induction(self, group, subgroup, p):
        local, _ = subgroup.to_group()
        for pair in enumerate_pairs(local, p):
            assert op_ind(subgroup, idempotent_v1(pair)).species == induction_rhs(subgroup, pair)

    @pytest.mark.parametrize("name, p", [("S3", 2), ("S3", 3), ("C6", 2), ("C2xC2", 2)])
    def test_inflation(self, name, p):
        group = catalog_group(name)
        for kernel in normal_subgroups(group):
            if kernel.order == 1:
                continue
            presentation = quotient(group, kernel)
            for pair in enumerate_pairs(presentation.quotient, p):
                assert op_inf(presentation, idempotent_v1(pair)).species == inflation_rhs(presentation, pair)

    def test_deflation_by_pprime_kernel(self, c6):
        presentation = quotient(c6, c6.subgroup([2]))
        pair = Pair(c6, c6.subgroup([3]), 2, 2)
        predicted = deflation_rhs(presentation, pair)
        assert op_def(presentation, idempotent_v1(pair)).species == predicted
        assert list(predicted) == [0, Fraction(1, 3)]

    def test_deflation_s3(self, s3):
        presentation = quotient(s3, s3.subgroup([1]))
        for pair in enumerate_pairs(s3, 3):
            if pair.span.order == s3.order:
                assert op_def(presentation, idempotent_v1(pair)).species == deflation_rhs(presentation, pair)

    def test_deflation_of_non_generating_pair(self, s3):
        c4 = cyclic_group(4)
        presentation = quotient(c4, c4.subgroup([2]))
        assert list(deflation_rhs(presentation, Pair(c4, c4.trivial, 0, 2))) == [Fraction(1, 2), 0]
        presentation = quotient(s3, s3.subgroup([1]))
        assert list(deflation_rhs(presentation, Pair(s3, s3.trivial, 0, 2))) == [Fraction(1, 3), 0]
        assert list(deflation_rhs(presentation, Pair(s3, s3.subgroup([2]), 0, 2))) == [0, 1]

    @pytest.mark.parametrize(
        "name, p", [("S3", 2), ("S3", 3), ("C4", 2), ("C6", 2), ("C6", 3), ("C2xC2", 2), ("D8", 2), ("A4", 2)]
    )
    def test_deflation_closed_form(self, name, p):
        group = catalog_group(name)
        for kernel in normal_subgroups(group):
            presentation = quotient(group, kernel)
            for pair in enumerate_pairs(group, p):
                assert op_def(presentation, idempotent_v1(pair)).species == deflation_rhs(presentation, pair)


class TestBimodules:
    def test_pprime_kernel_is_diagonal(self, c6):
        presentation = quotient(c6, c6.subgroup([2]))
        assert deflation_bimodule_is_diagonal(presentation, 2)
        assert inflation_bimodule_is_diagonal(presentation, 2)

    def test_p_kernel_is_not_diagonal(self, c2):
        presentation = quotient(c2, c2.whole)
        assert not deflation_bimodule_is_diagonal(presentation, 2)
        assert not inflation_bimodule_is_diagonal(presentation, 2)

    def test_tensor_with_identity(self, s3):
        product = DirectProduct(s3, s3)
        diagonal = Subgroup(product, tuple(sorted(product.pair(g, g) for g in s3.elements)))
        identity = TElement.from_symbol(trivial_symbol(product, diagonal), 3)
        line = TElement.from_symbol(trivial_symbol(s3, s3.subgroup([2])), 3)
        assert tensor_over(identity, line) == line
        assert tensor_over(identity, TElement.regular(s3, 3)) == TElement.regular(s3, 3)

    def test_tensor_needs_product(self, s3):
        with pytest.raises(StructureMismatchError, match="H x G"):
            tensor_over(TElement.trivial(s3, 3), TElement.trivial(s3, 3))
