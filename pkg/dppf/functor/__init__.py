# coding=utf-8
# Copyright (c) dppf contributors
"""Composition, subfunctor lattice, simple functor dimensions and essential algebras of the diagonal functor."""
from dppf.functor.composition import (
    CompositionCheck,
    compare_composition,
    compose_idempotents,
    compose_via_tensor,
    identity_bimodule_check,
    support_holds,
    support_obstruction,
)
from dppf.functor.decomposition import (
    LatticeReport,
    SimpleLabel,
    SubfunctorDescriptor,
    W_dimension,
    functor_decomposition,
    lattice_check,
    minimal_group_check,
    s11_dim,
    simple_dim,
    subfunctor_eval,
)
from dppf.functor.essential import EssentialReport, essential_report

__all__ = (
    "CompositionCheck",
    "compare_composition",
    "compose_idempotents",
    "compose_via_tensor",
    "identity_bimodule_check",
    "support_holds",
    "support_obstruction",
    "LatticeReport",
    "SimpleLabel",
    "SubfunctorDescriptor",
    "W_dimension",
    "functor_decomposition",
    "lattice_check",
    "minimal_group_check",
    "s11_dim",
    "simple_dim",
    "subfunctor_eval",
    "EssentialReport",
    "essential_report",
)
