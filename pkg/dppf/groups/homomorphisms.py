# coding=utf-8
# Copyright (c) dppf contributors
"""Brute-force isomorphism search between small groups."""
from __future__ import annotations

import logging
from collections import deque
from typing import Collection, Iterator, Mapping, Sequence

from dppf._exceptions import GroupTooLargeError
from dppf.groups._group import Group, GroupMap

logger = logging.getLogger(__name__)

MAX_ISOMORPHISM_ORDER = 64


def generating_sequence(group: Group, first: Sequence[int] = ()) -> list[int]:
    """
    A short generating sequence, greedily adding the element of largest order outside the current closure.

    Elements listed in ``first`` are put in front, in that order.
    """
    sequence: list[int] = []
    closure: tuple[int, ...] = (0,)
    for g in first:
        if g not in closure:
            sequence.append(g)
            closure = group.generate(sequence)
    while len(closure) < group.order:
        members = set(closure)
        candidate = max(
            (g for g in group.elements if g not in members),
            key=lambda g: (group.element_order(g), -g),
        )
        sequence.append(candidate)
        closure = group.generate(sequence)
    return sequence


def _extend(source: Group, target: Group, generators: Sequence[int], images: Sequence[int]) -> dict[int, int] | None:
    """
    Extend generator images to a map on the generated subgroup, or ``None`` if that is not an injective homomorphism.

    The map is defined breadth-first along right multiplication by generators, then checked on every such edge.
    """
    mapping = {0: 0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for gen, img in zip(generators, images):
            b = int(source.table[a, gen])
            value = int(target.table[mapping[a], img])
            known = mapping.get(b)
            if known is None:
                mapping[b] = value
                queue.append(b)
            elif known != value:
                return None
    if len(set(mapping.values())) != len(mapping):
        return None
    return mapping


def isomorphisms(
    source: Group,
    target: Group,
    constraint: Mapping[int, Collection[int]] | None = None,
    max_order: int = MAX_ISOMORPHISM_ORDER,
) -> Iterator[GroupMap]:
    """
    Lazily yield every isomorphism ``source -> target`` meeting ``constraint``.

    Parameters
    ----------
    source, target : Group
        Groups of equal order, at most ``max_order``.
    constraint : mapping, optional
        ``{x: allowed}`` restricting the image of the source element ``x`` to ``allowed``.
    max_order : int
        Largest order searched. Pair comparisons pass the subgroup bound.

    Yields
    ------
    GroupMap
        Bijective homomorphisms.
    """
    for group in (source, target):
        if group.order > max_order:
            raise GroupTooLargeError(group.order, max_order, group.name or None)
    if source.order != target.order:
        return
    if sorted(source.element_orders.tolist()) != sorted(target.element_orders.tolist()):
        return

    constraint = dict(constraint or {})
    constrained = [x for x in constraint if x != 0]
    for x in constrained:
        constraint[x] = [y for y in constraint[x] if target.element_order(y) == source.element_order(x)]
    generators = generating_sequence(source, first=constrained)

    candidates: list[list[int]] = []
    for gen in generators:
        allowed = constraint.get(gen, target.elements)
        candidates.append([y for y in allowed if target.element_order(y) == source.element_order(gen)])

    def backtrack(depth: int, images: list[int]) -> Iterator[GroupMap]:
        if depth == len(generators):
            mapping = _extend(source, target, generators, images)
            if mapping is None or len(mapping) != source.order:
                return
            if any(mapping[x] not in constraint[x] for x in constrained):
                return
            yield GroupMap(source, target, tuple(mapping[x] for x in source.elements), bijective=True, check=False)
            return
        for image in candidates[depth]:
            if image in images:
                continue
            images.append(image)
            if _extend(source, target, generators[: depth + 1], images) is not None:
                yield from backtrack(depth + 1, images)
            images.pop()

    yield from backtrack(0, [])


def are_isomorphic(source: Group, target: Group) -> bool:
    return next(isomorphisms(source, target), None) is not None


def automorphisms(group: Group) -> list[GroupMap]:
    return list(isomorphisms(group, group))


def outer_automorphism_order(group: Group) -> int:
    """``|Out(G)| = |Aut(G)| / |Inn(G)|`` with ``|Inn(G)| = |G| / |Z(G)|``."""
    automorphism_count = sum(1 for _ in isomorphisms(group, group))
    inner = group.order // group.center.order
    logger.debug("Group %s: |Aut| = %d, |Inn| = %d.", group.name, automorphism_count, inner)
    return automorphism_count // inner
