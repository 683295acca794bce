# coding=utf-8
# Copyright (c) dppf contributors
"""The primitive idempotents ``F_{P,s}`` of ``F T(G)`` as explicit combinations of monomial symbols."""
from __future__ import annotations

import functools
import logging
from fractions import Fraction

from dppf._exceptions import PairError
from dppf.cyclo import CycloNum
from dppf.groups import Subgroup, centralizer, normalizer
from dppf.pairs import Pair, PairGroup
from dppf.poset import MoebiusFunction, subgroup_moebius
from dppf.ppring.element import TElement
from dppf.ppring.symbols import MonomialSymbol, pair_character_symbol

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=1024)
def span_subgroups(pair: Pair) -> tuple[Subgroup, ...]:
    """All subgroups of ``<Ps>`` as subgroups of the ambient group."""
    local = PairGroup.of(pair)
    return tuple(local.embedding.image(s) for s in local.group.subgroups)


@functools.lru_cache(maxsize=1024)
def span_moebius(pair: Pair) -> MoebiusFunction:
    return subgroup_moebius(span_subgroups(pair))


@functools.lru_cache(maxsize=1024)
def stable_subgroups(pair: Pair) -> tuple[Subgroup, ...]:
    """The subgroups of ``P`` normalised by ``s``."""
    return tuple(L for L in span_subgroups(pair) if L.issubset(pair.P) and L.is_normalized_by(pair.s))


@functools.lru_cache(maxsize=1024)
def stable_moebius(pair: Pair) -> MoebiusFunction:
    """Möbius function of the poset of ``s``-stable subgroups of ``P``."""
    return subgroup_moebius(stable_subgroups(pair))


def quotient_centralizer_order(pair: Pair) -> int:
    """``|C_{N_G(P)/P}(sP)| = #{g in N_G(P) : g s g^-1 in sP} / |P|``."""
    group = pair.ambient
    coset = set(pair.P.product_set([pair.s]))
    hits = sum(1 for g in normalizer(group, pair.P) if group.conjugate(g, pair.s) in coset)
    return hits // pair.P.order


def idempotent_v1(pair: Pair) -> TElement:
    """
    ``F_{P,s}`` as a sum over the subgroups ``L`` of ``<Ps>`` with ``PL = <Ps>``.

    ``1/(|P| |s| |C_{N_G(P)/P}(sP)|) sum_{phi, L} phi(s^-1) |L| mu(L, <Ps>) [Ind_L^G k_{L,phi}]``.
    """
    span = pair.span
    n = pair.s_order
    mu = span_moebius(pair)
    prefactor = Fraction(1, pair.P.order * n * quotient_centralizer_order(pair))
    terms: list[tuple[MonomialSymbol, CycloNum]] = []
    for L in span_subgroups(pair):
        if len(pair.P.product_set(L)) != span.order:
            continue
        weight = L.order * mu(L, span)
        if not weight:
            continue
        for e in range(n):
            coefficient = CycloNum.root(n, -e) * (prefactor * weight)
            terms.append((pair_character_symbol(pair, L, e), coefficient))
    return TElement.from_combination(pair.ambient, pair.p, terms)


def idempotent_v2(pair: Pair) -> TElement:
    """
    ``F_{P,s}`` as a sum over the ``s``-stable subgroups ``L`` of ``P``.

    ``1/|C_{N_G(P)}(s)| sum_{phi, L} phi(s^-1) |C_L(s)| mu_s(L, P) [Ind_{<Ls>}^G k_{<Ls>,phi}]``.
    """
    group = pair.ambient
    n = pair.s_order
    mu = stable_moebius(pair)
    stabilizer = normalizer(group, pair.P).meet(centralizer(group, [pair.s]))
    prefactor = Fraction(1, stabilizer.order)
    terms: list[tuple[MonomialSymbol, CycloNum]] = []
    for L in stable_subgroups(pair):
        weight = sum(1 for x in L if group.commute(x, pair.s)) * mu(L, pair.P)
        if not weight:
            continue
        extended = L.join([pair.s])
        for e in range(n):
            coefficient = CycloNum.root(n, -e) * (prefactor * weight)
            terms.append((pair_character_symbol(pair, extended, e), coefficient))
    return TElement.from_combination(group, pair.p, terms)


def primitive_idempotent(pair: Pair) -> TElement:
    return idempotent_v1(pair)


def deflation_constant(pair: Pair, kernel: Subgroup) -> Fraction:
    """
    The constant ``m`` with ``Def F_{P,s} = m F_{PN/N, sN}`` for ``G = <Ps>`` and ``N = kernel``.

    ``|s| / (|N ∩ <s>| |C_G(s)|) sum |C_Q(s)| mu_s(Q, P)`` over the ``s``-stable ``Q <= P`` with ``<Qs> N = G``.
    """
    group = pair.ambient
    if pair.span.order != group.order:
        raise PairError(f"{pair.render()} does not generate '{group.name}'.")
    if kernel.parent is not group or not kernel.is_normal():
        raise PairError(f"{kernel.render()} is not a normal subgroup of '{group.name}'.")
    powers = {group.power(pair.s, i) for i in range(pair.s_order)}
    meet = len(powers & set(kernel.elements))
    mu = stable_moebius(pair)
    total = 0
    for Q in stable_subgroups(pair):
        if len(Q.join([pair.s]).product_set(kernel)) != group.order:
            continue
        total += sum(1 for x in Q if group.commute(x, pair.s)) * mu(Q, pair.P)
    return Fraction(pair.s_order * total, meet * centralizer(group, [pair.s]).order)
