# coding=utf-8
# Copyright (c) dppf contributors
"""
Pairs ``(P, s)``: a p-subgroup ``P`` with a p'-element ``s`` normalising it.

This module enumerates pairs up to conjugacy, decides isomorphism of pairs, computes the reduction modulo
``C_<s>(P)`` and enumerates twisted diagonal pairs of direct products.
"""
from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from typing import Any, Iterator

import numpy as np

from dppf._exceptions import GroupTooLargeError, PairError, StructureMismatchError
from dppf.groups import DirectProduct, Group, GroupMap, Subgroup, isomorphisms, normalizer, quotient
from dppf.groups.subgroups import MAX_SUBGROUP_ORDER, canonical_conjugate, centralizer

logger = logging.getLogger(__name__)

MAX_DIAGONAL_FACTOR_ORDER = 32


@dataclass(frozen=True, eq=False)
class Pair:
    """
    A pair ``(P, s)`` in ``ambient`` for the prime ``p``.

    Equality is structural (same ambient object, same ``P``, same ``s``); use :func:`pairs_isomorphic` or
    :meth:`PairClasses.locate` for the coarser relations.
    """

    ambient: Group
    P: Subgroup
    s: int
    p: int
    check: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        if not self.check:
            return
        if self.P.parent is not self.ambient:
            raise PairError(f"P = {self.P.render()} does not live in '{self.ambient.name}'.")
        if not self.P.is_p_group(self.p):
            raise PairError(f"|P| = {self.P.order} is not a power of {self.p}.")
        if not 0 <= self.s < self.ambient.order:
            raise PairError(f"s = {self.s} is not an element of '{self.ambient.name}'.")
        if self.ambient.element_order(self.s) % self.p == 0:
            raise PairError(f"s = {self.s} has order {self.ambient.element_order(self.s)}, not coprime to {self.p}.")
        if not self.P.is_normalized_by(self.s):
            raise PairError(f"s = {self.s} does not normalise P = {self.P.render()}.")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pair):
            return NotImplemented
        return self.ambient is other.ambient and self.P == other.P and self.s == other.s and self.p == other.p

    def __hash__(self) -> int:
        return hash((id(self.ambient), self.P.elements, self.s, self.p))

    @property
    def s_order(self) -> int:
        return self.ambient.element_order(self.s)

    @functools.cached_property
    def span(self) -> Subgroup:
        """``<Ps> = P <s>``."""
        powers = [self.ambient.power(self.s, i) for i in range(self.s_order)]
        return Subgroup(self.ambient, self.P.product_set(powers), check=False)

    @functools.cached_property
    def s_centralizer(self) -> tuple[int, ...]:
        """``C_<s>(P)`` as sorted identifiers."""
        powers = {self.ambient.power(self.s, i) for i in range(self.s_order)}
        return tuple(sorted(powers & set(centralizer(self.ambient, self.P.elements).elements)))

    def conjugate(self, g: int) -> Pair:
        return Pair(self.ambient, self.P.conjugate(g), self.ambient.conjugate(g, self.s), self.p, check=False)

    def transport(self, f: GroupMap) -> Pair:
        """The image pair along an injective homomorphism defined on the ambient group."""
        if f.source is not self.ambient:
            raise StructureMismatchError("map source is not the ambient group of the pair.")
        return Pair(f.target, f.image(self.P), f(self.s), self.p)

    def is_conjugate(self, other: Pair) -> bool:
        """Simultaneous conjugacy of ``(P, s)`` by an exhaustive scan over the ambient group."""
        if other.ambient is not self.ambient or other.P.order != self.P.order:
            return False
        group = self.ambient
        hits = np.nonzero(group.conjugation_table[:, self.s] == other.s)[0]
        target = set(other.P.elements)
        return any(set(group.conjugation_table[g, self.P.array].tolist()) == target for g in hits)

    def render(self) -> str:
        return f"(P={self.P.render()}, s={self.s})"

    def summary(self) -> dict[str, Any]:
        return {
            "P": list(self.P.elements),
            "s": self.s,
            "order_P": self.P.order,
            "order_s": self.s_order,
            "order_span": self.span.order,
            "ddelta": is_ddelta(self),
        }

    def __repr__(self) -> str:
        return f"Pair{self.render()} in {self.ambient.name or 'group'} at p={self.p}"


@dataclass(frozen=True)
class PairGroup:
    """
    The span ``<Ps>`` of a pair as a standalone group.

    ``local`` is the same pair read inside ``group``; ``embedding`` maps ``group`` back into the ambient group.
    """

    pair: Pair
    span: Subgroup
    group: Group
    embedding: GroupMap
    local: Pair

    @classmethod
    def of(cls, pair: Pair) -> PairGroup:
        return _pair_group(pair)


@functools.lru_cache(maxsize=1024)
def _pair_group(pair: Pair) -> PairGroup:
    group, embedding = pair.span.to_group()
    lookup = embedding.lookup()
    local = Pair(group, Subgroup(group, tuple(lookup[x] for x in pair.P), check=False), lookup[pair.s], pair.p)
    return PairGroup(pair, pair.span, group, embedding, local)


class PairClasses:
    """
    Representatives of the conjugacy classes of pairs of a group, in a fixed order.

    The order is ``|P|`` ascending, then the elements of ``P``, then ``s``. Two instances built for the same group
    and prime are equal.
    """

    def __init__(self, group: Group, p: int):
        self.group = group
        self.p = p
        self._pairs: list[Pair] = []
        # canonical P -> {p'-element of N_G(P): class index}
        self._index: dict[tuple[int, ...], dict[int, int]] = {}
        self._build()

    def _build(self) -> None:
        group, p = self.group, self.p
        representatives = sorted(
            {canonical_conjugate(s)[0] for s in group.subgroups if s.is_p_group(p)},
            key=lambda s: (s.order, s.elements),
        )
        for P in representatives:
            norm = normalizer(group, P)
            classes: dict[int, int] = {}
            for x in norm:
                if x in classes or group.element_order(x) % p == 0:
                    continue
                orbit = {group.conjugate(n, x) for n in norm}
                index = len(self._pairs)
                self._pairs.append(Pair(group, P, min(orbit), p, check=False))
                classes.update({y: index for y in orbit})
            self._index[P.elements] = classes
        logger.debug("Group %s at p=%d has %d pair classes.", group.name, p, len(self._pairs))

    def __len__(self) -> int:
        return len(self._pairs)

    def __getitem__(self, index: int) -> Pair:
        return self._pairs[index]

    def __iter__(self) -> Iterator[Pair]:
        return iter(self._pairs)

    @property
    def pairs(self) -> list[Pair]:
        return list(self._pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairClasses):
            return NotImplemented
        return other.group is self.group and other.p == self.p

    def __hash__(self) -> int:
        return hash((id(self.group), self.p))

    def locate(self, pair: Pair) -> int:
        """Index of the conjugacy class of an arbitrary pair of the group."""
        if pair.ambient is not self.group or pair.p != self.p:
            raise StructureMismatchError(f"pair {pair.render()} does not belong to these classes.")
        representative, g = canonical_conjugate(pair.P)
        return self._index[representative.elements][self.group.conjugate(g, pair.s)]


@functools.lru_cache(maxsize=256)
def enumerate_pairs(group: Group, p: int) -> PairClasses:
    """
    Representatives of the ``G``-conjugacy classes of pairs.

    p-subgroups are fused under conjugation, then the p'-elements of each normaliser ``N_G(P)`` are taken up to
    ``N_G(P)``-conjugacy.
    """
    if group.order > MAX_SUBGROUP_ORDER:
        raise GroupTooLargeError(group.order, MAX_SUBGROUP_ORDER, group.name or None)
    return PairClasses(group, p)


def pairs_isomorphic(a: Pair, b: Pair) -> bool:
    """
    Whether some isomorphism ``f: <P_a s_a> -> <P_b s_b>`` sends ``s_a`` to a conjugate of ``s_b``.

    ``P`` is the unique Sylow p-subgroup of its span, so ``f`` automatically maps ``P_a`` onto ``P_b``.
    """
    if a.p != b.p:
        return False
    if (a.P.order, a.s_order, a.span.order) != (b.P.order, b.s_order, b.span.order):
        return False
    source, target = PairGroup.of(a), PairGroup.of(b)
    allowed = target.group.class_of(target.local.s)
    constraint = {source.local.s: allowed}
    search = isomorphisms(source.group, target.group, constraint, max_order=MAX_SUBGROUP_ORDER)
    return next(search, None) is not None


def _quotient_pair(pair: PairGroup, kernel: tuple[int, ...]) -> Pair:
    """``(PK/K, sK)`` in ``<Ps>/K`` for a normal subgroup ``K`` of the span group."""
    presentation = quotient(pair.group, Subgroup(pair.group, kernel, check=False))
    projected = presentation.image(pair.local.P)
    return Pair(presentation.quotient, projected, presentation.projection(pair.local.s), pair.local.p)


def reduce_pair(a: Pair) -> Pair:
    """
    The reduction of ``a``: its image in ``<Ps> / C_<s>(P)``.

    The representative lives in the quotient of the span group numbered by least coset representatives. Pairs that
    already are D^Δ-pairs and span their ambient group are returned unchanged.
    """
    if is_ddelta(a) and a.span.order == a.ambient.order:
        return a
    local = PairGroup.of(a)
    kernel = tuple(sorted(local.embedding.lookup()[x] for x in a.s_centralizer))
    return _quotient_pair(local, kernel)


def is_ddelta(a: Pair) -> bool:
    """Whether ``C_<s>(P) = 1``."""
    return len(a.s_centralizer) == 1


def normal_pprime_subgroups(group: Group, p: int) -> list[Subgroup]:
    return [s for s in group.subgroups if s.order % p != 0 and s.is_normal()]


def is_pprime_quotient(target: Pair, source: Pair) -> bool:
    """Whether ``target`` is isomorphic to ``(P K/K, s K)`` for some normal p'-subgroup ``K`` of ``<P s>``."""
    if target.p != source.p or target.P.order != source.P.order:
        return False
    if source.span.order % target.span.order:
        return False
    local = PairGroup.of(source)
    wanted = source.span.order // target.span.order
    for kernel in normal_pprime_subgroups(local.group, source.p):
        if kernel.order != wanted:
            continue
        if pairs_isomorphic(target, _quotient_pair(local, kernel.elements)):
            return True
    return False


def is_twisted_diagonal(product: DirectProduct, elements: tuple[int, ...] | Subgroup) -> bool:
    """Whether ``k_1(X) = k_2(X) = 1``."""
    return product.first_kernel(elements) == (0,) and product.second_kernel(elements) == (0,)


@dataclass(frozen=True, eq=False)
class DiagonalPair:
    """
    A pair ``(Q, t)`` of ``H x G`` with ``Q`` twisted diagonal.

    ``eta`` is the canonical isomorphism ``p_1(Q) -> p_2(Q)`` given on identifiers of ``H`` and ``G``.
    """

    ambient: DirectProduct
    pair: Pair
    first: Subgroup
    second: Subgroup
    eta: dict[int, int]

    @classmethod
    def from_pair(cls, pair: Pair) -> DiagonalPair:
        product = pair.ambient
        if not isinstance(product, DirectProduct):
            raise StructureMismatchError("diagonal pairs live in direct products.")
        if not is_twisted_diagonal(product, pair.P):
            raise PairError(f"{pair.render()} is not twisted diagonal.")
        eta = {product.p1(x): product.p2(x) for x in pair.P}
        return cls(product, pair, product.project_first(pair.P), product.project_second(pair.P), eta)

    @property
    def Q(self) -> Subgroup:
        return self.pair.P

    @property
    def t(self) -> int:
        return self.pair.s

    def render(self) -> str:
        u, v = self.ambient.split(self.t)
        delta = ",".join(f"({h},{g})" for h, g in sorted(self.eta.items()))
        return f"(Q={{{delta}}}, t=({u},{v}))"


def _p_subgroup_classes(group: Group, p: int) -> list[Subgroup]:
    return sorted(
        {canonical_conjugate(s)[0] for s in group.subgroups if s.is_p_group(p)},
        key=lambda s: (s.order, s.elements),
    )


@functools.lru_cache(maxsize=64)
def enumerate_diagonal_pairs(first: Group, second: Group, p: int) -> tuple[DiagonalPair, ...]:
    """
    Representatives of the ``H x G``-classes of pairs with twisted diagonal ``Q``.

    For each class of p-subgroups ``P'`` of ``H`` and ``P`` of ``G`` and each isomorphism ``phi: P -> P'`` up to
    ``N_H(P') x N_G(P)``, the subgroup ``{(phi(x), x)}`` is formed. Its p'-elements ``t = (u, v)`` are those with
    ``u`` in ``N_H(P')``, ``v`` in ``N_G(P)`` and ``c_u o phi = phi o c_v``, taken up to conjugacy in the normaliser.
    Subgroups of ``H x G`` are never enumerated.
    """
    for group in (first, second):
        if group.order > MAX_DIAGONAL_FACTOR_ORDER:
            raise GroupTooLargeError(group.order, MAX_DIAGONAL_FACTOR_ORDER, group.name or None)
    product = DirectProduct(first, second)
    result: list[DiagonalPair] = []

    for P_first in _p_subgroup_classes(first, p):
        for P_second in _p_subgroup_classes(second, p):
            if P_first.order != P_second.order:
                continue
            norm_first, norm_second = normalizer(first, P_first), normalizer(second, P_second)
            group_first, embed_first = P_first.to_group()
            group_second, embed_second = P_second.to_group()

            seen: set[tuple[int, ...]] = set()
            for iso in isomorphisms(group_second, group_first):
                # phi: P_second -> P_first on ambient identifiers
                phi = {embed_second(x): embed_first(iso(x)) for x in group_second.elements}
                delta = tuple(sorted(product.pair(phi[x], x) for x in P_second))
                if delta in seen:
                    continue
                orbit = {
                    tuple(sorted(product.pair(first.conjugate(u, phi[second.conjugate(second.inv(v), x)]), x)
                                 for x in P_second))
                    for u in norm_first
                    for v in norm_second
                }
                seen.update(orbit)
                result.extend(_diagonal_pairs_for(product, delta, norm_first, norm_second, p))

    result.sort(key=lambda d: (d.Q.order, d.Q.elements, d.t))
    logger.debug("Product %s at p=%d has %d diagonal pair classes.", product.name, p, len(result))
    return tuple(result)


def _diagonal_pairs_for(
    product: DirectProduct, delta: tuple[int, ...], norm_first: Subgroup, norm_second: Subgroup, p: int
) -> list[DiagonalPair]:
    Q = Subgroup(product, delta, check=False)
    stabilising = [product.pair(u, v) for u in norm_first for v in norm_second]
    normalising = [x for x in stabilising if Q.is_normalized_by(x)]
    classes: set[int] = set()
    found = []
    for t in normalising:
        if t in classes or product.element_order(t) % p == 0:
            continue
        orbit = {product.conjugate(n, t) for n in normalising}
        classes.update(orbit)
        found.append(DiagonalPair.from_pair(Pair(product, Q, min(orbit), p)))
    return found
