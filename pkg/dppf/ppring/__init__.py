# coding=utf-8
# Copyright (c) dppf contributors
"""The ring of p-permutation modules in species coordinates, its idempotents and biset operations."""
from dppf.ppring.biset import (
    deflation_bimodule_is_diagonal,
    deflation_rhs,
    induction_rhs,
    inflation_bimodule_is_diagonal,
    inflation_rhs,
    op_def,
    op_ind,
    op_inf,
    op_iso,
    op_res,
    pair_stabilizer_index,
    restriction_rhs,
    tensor_over,
)
from dppf.ppring.element import SpeciesVector, TElement
from dppf.ppring.idempotents import deflation_constant, idempotent_v1, idempotent_v2, primitive_idempotent
from dppf.ppring.oracle import brauer_quotient_species_char2
from dppf.ppring.symbols import MonomialSymbol, species_of_monomial, trivial_symbol

__all__ = (
    "MonomialSymbol",
    "SpeciesVector",
    "TElement",
    "species_of_monomial",
    "trivial_symbol",
    "idempotent_v1",
    "idempotent_v2",
    "primitive_idempotent",
    "deflation_constant",
    "op_res",
    "op_ind",
    "op_inf",
    "op_def",
    "op_iso",
    "restriction_rhs",
    "induction_rhs",
    "inflation_rhs",
    "deflation_rhs",
    "pair_stabilizer_index",
    "deflation_bimodule_is_diagonal",
    "inflation_bimodule_is_diagonal",
    "tensor_over",
    "brauer_quotient_species_char2",
)
