# Copyright (c) dppf contributors
"""Finite groups as multiplication tables."""
from dppf.groups._group import DirectProduct, Group, GroupMap, QuotientPresentation, Subgroup
from dppf.groups.catalog import CATALOG, catalog_group, catalog_names, semidirect_product
from dppf.groups.homomorphisms import isomorphisms, outer_automorphism_order
from dppf.groups.io import load_group_file, resolve_group
from dppf.groups.permutations import from_permutation_generators, parse_cycles
from dppf.groups.subgroups import (
    all_subgroups,
    centralizer,
    conjugacy_classes,
    normalizer,
    p_part,
    pair_stabilizer,
    pprime_part,
    quotient,
)

__all__ = (
    "Group",
    "Subgroup",
    "GroupMap",
    "QuotientPresentation",
    "DirectProduct",
    "CATALOG",
    "catalog_group",
    "catalog_names",
    "semidirect_product",
    "isomorphisms",
    "outer_automorphism_order",
    "load_group_file",
    "resolve_group",
    "from_permutation_generators",
    "parse_cycles",
    "all_subgroups",
    "centralizer",
    "conjugacy_classes",
    "normalizer",
    "p_part",
    "pair_stabilizer",
    "pprime_part",
    "quotient",
)
