# coding=utf-8
# Copyright (c) dppf contributors
"""Subgroup lattice, centralisers, normalisers, quotients and the p/p'-decomposition of elements."""
from __future__ import annotations

import logging
from typing import Iterable

import numpy as np

from dppf._exceptions import GroupError, GroupTooLargeError, StructureMismatchError
from dppf.groups._group import Group, GroupMap, QuotientPresentation, Subgroup

logger = logging.getLogger(__name__)

MAX_SUBGROUP_ORDER = 128


def enumerate_subgroups(group: Group) -> tuple[Subgroup, ...]:
    """
    All subgroups of ``group`` by cyclic extension.

    Starting from the trivial subgroup, every subgroup found is extended by one element and closed, until no new
    subgroup appears. The result is ordered by ``(size, elements)``.
    """
    if group.order > MAX_SUBGROUP_ORDER:
        raise GroupTooLargeError(group.order, MAX_SUBGROUP_ORDER, group.name or None)

    cyclic = {g: group.generate([g]) for g in group.elements}
    found: dict[tuple[int, ...], Subgroup] = {(0,): group.trivial}
    layer = [(0,)]
    while layer:
        next_layer = []
        for elements in layer:
            members = set(elements)
            tried: set[tuple[int, ...]] = set()
            for g in group.elements:
                if g in members or cyclic[g] in tried:
                    continue
                tried.add(cyclic[g])
                extension = group.generate((*elements, g))
                if extension not in found:
                    found[extension] = Subgroup(group, extension, check=False)
                    next_layer.append(extension)
        layer = next_layer

    logger.debug("Group %s has %d subgroups.", group.name, len(found))
    return tuple(sorted(found.values(), key=lambda s: (s.order, s.elements)))


def conjugacy_classes(group: Group) -> tuple[tuple[int, ...], ...]:
    """Orbits of the conjugation action, each sorted and represented by its least element, sorted by representative."""
    return group.classes


def all_subgroups(group: Group, up_to_conjugacy: bool = False) -> tuple[Subgroup, ...]:
    if not up_to_conjugacy:
        return group.subgroups
    representatives = {canonical_conjugate(s)[0] for s in group.subgroups}
    return tuple(sorted(representatives, key=lambda s: (s.order, s.elements)))


def centralizer(group: Group, elements: Iterable[int]) -> Subgroup:
    """Pointwise centraliser of a set of elements."""
    arr = np.fromiter(elements, dtype=np.int64)
    if arr.size == 0:
        return group.whole
    fixes = np.all(group.conjugation_table[:, arr] == arr[None, :], axis=1)
    return Subgroup(group, tuple(int(g) for g in np.nonzero(fixes)[0]), check=False)


def normalizer(group: Group, subgroup: Subgroup) -> Subgroup:
    """Setwise normaliser, by scanning all elements."""
    _check_parent(group, subgroup)
    stable = np.all(subgroup.mask[group.conjugation_table[:, subgroup.array]], axis=1)
    return Subgroup(group, tuple(int(g) for g in np.nonzero(stable)[0]), check=False)


def pair_stabilizer(group: Group, subgroup: Subgroup, element: int) -> Subgroup:
    """``N_G(Q, t)``: elements normalising ``Q`` and commuting with ``t``."""
    return normalizer(group, subgroup).meet(centralizer(group, [element]))


def canonical_conjugate(subgroup: Subgroup) -> tuple[Subgroup, int]:
    """
    The least conjugate of ``subgroup`` (by sorted element tuple) and an element conjugating onto it.

    Returns
    -------
    tuple
        ``(representative, g)`` with ``g subgroup g^-1 == representative``.
    """
    group = subgroup.parent
    conjugates = np.sort(group.conjugation_table[:, subgroup.array], axis=1)
    best = int(np.lexsort(conjugates.T[::-1])[0])
    return Subgroup(group, tuple(int(x) for x in conjugates[best]), check=False), best


def are_conjugate(a: Subgroup, b: Subgroup) -> bool:
    if a.parent is not b.parent or a.order != b.order:
        return False
    return canonical_conjugate(a)[0] == canonical_conjugate(b)[0]


def sylow_subgroup(group: Group, p: int) -> Subgroup:
    """The first Sylow ``p``-subgroup in the canonical subgroup order."""
    largest = group.trivial
    for candidate in group.subgroups:
        if candidate.is_p_group(p) and candidate.order > largest.order:
            largest = candidate
    return largest


def p_subgroups(group: Group, p: int) -> tuple[Subgroup, ...]:
    return tuple(s for s in group.subgroups if s.is_p_group(p))


def _split_order(n: int, p: int) -> tuple[int, int]:
    p_power = 1
    while n % p == 0:
        n //= p
        p_power *= p
    return p_power, n


def pprime_part(group: Group, g: int, p: int) -> int:
    """
    The ``p'``-part of ``g``.

    With ``ord(g) = p^k * r`` and ``gcd(p, r) = 1``, the ``p'``-part is ``g^(a p^k)`` where ``a p^k = 1 mod r``.
    """
    p_power, rest = _split_order(group.element_order(g), p)
    exponent = pow(p_power, -1, rest) * p_power if rest > 1 else 0
    return group.power(g, exponent)


def p_part(group: Group, g: int, p: int) -> int:
    """The ``p``-part of ``g``, so that ``g = p_part * pprime_part`` with commuting factors."""
    p_power, rest = _split_order(group.element_order(g), p)
    exponent = pow(rest, -1, p_power) * rest if p_power > 1 else 0
    return group.power(g, exponent)


def is_pprime_element(group: Group, g: int, p: int) -> bool:
    return group.element_order(g) % p != 0


def quotient(group: Group, kernel: Subgroup) -> QuotientPresentation:
    """
    ``group / kernel`` on least coset representatives.

    Raises
    ------
    GroupError
        If ``kernel`` is not normal.
    """
    _check_parent(group, kernel)
    if not kernel.is_normal():
        raise GroupError(f"subgroup {kernel.render()} is not normal, cannot form the quotient.", group.name or None)

    coset_of = np.full(group.order, -1, dtype=np.int64)
    representatives: list[int] = []
    for g in group.elements:
        if coset_of[g] >= 0:
            continue
        coset_of[group.table[g, kernel.array]] = len(representatives)
        representatives.append(g)

    reps = np.array(representatives, dtype=np.int64)
    table = coset_of[group.table[reps[:, None], reps[None, :]]]
    name = f"{group.name}/{kernel.render()}" if kernel.order > 1 else group.name
    quotient_group = Group(table, name=name, validate=False)
    projection = GroupMap(group, quotient_group, tuple(int(c) for c in coset_of), check=False)
    return QuotientPresentation(group, kernel, quotient_group, projection, tuple(representatives))


def normal_subgroups(group: Group) -> tuple[Subgroup, ...]:
    return tuple(s for s in group.subgroups if s.is_normal())


def _check_parent(group: Group, subgroup: Subgroup) -> None:
    if subgroup.parent is not group:
        raise StructureMismatchError(f"subgroup {subgroup.render()} does not live in group '{group.name}'.")
