# coding=utf-8
# Copyright (c) dppf contributors
"""
Restriction, induction, inflation, deflation and transport of elements, computed on monomial symbols.

Each ``op_*`` works symbol by symbol. The ``*_rhs`` functions give the species of the same operation applied to a
primitive idempotent as predicted in closed form, so the two can be compared.
"""
from __future__ import annotations

import logging
import math
from fractions import Fraction

from dppf._exceptions import StructureMismatchError
from dppf.cyclo import CycloNum
from dppf.groups import DirectProduct, GroupMap, QuotientPresentation, Subgroup, pair_stabilizer
from dppf.groups.subgroups import sylow_subgroup
from dppf.pairs import Pair, PairGroup, enumerate_pairs, is_twisted_diagonal
from dppf.ppring.element import SpeciesVector, TElement
from dppf.ppring.idempotents import deflation_constant
from dppf.ppring.symbols import MonomialSymbol, double_coset_representatives, symbol_from_function

logger = logging.getLogger(__name__)


def _require_symbols(x: TElement) -> None:
    if not x.has_symbols:
        raise StructureMismatchError("biset operations need an element with monomial symbols.")


def op_res(subgroup: Subgroup, x: TElement) -> TElement:
    """Restriction to ``subgroup`` by the Mackey formula over the double cosets ``H \\ G / L``."""
    _require_symbols(x)
    group = x.ambient
    if subgroup.parent is not group:
        raise StructureMismatchError(f"{subgroup.render()} is not a subgroup of '{group.name}'.")
    target, embedding = subgroup.to_group()
    lookup = embedding.lookup()
    terms: list[tuple[MonomialSymbol, CycloNum]] = []
    for symbol, coefficient in x.terms.items():
        character = symbol.character
        for g in double_coset_representatives(subgroup, symbol.L):
            conjugated = set(group.conjugation_table[g, symbol.L.array].tolist())
            meet = [h for h in subgroup if h in conjugated]
            g_inv = group.inv(g)
            exponents = {lookup[h]: character[group.conjugate(g_inv, h)] for h in meet}
            L = Subgroup(target, tuple(lookup[h] for h in meet), check=False)
            terms.append((symbol_from_function(target, L, symbol.modulus, exponents), coefficient))
    return TElement.from_combination(target, x.p, terms)


def op_ind(subgroup: Subgroup, x: TElement) -> TElement:
    """Induction from the standalone group of ``subgroup`` to its parent, by transitivity of induction."""
    _require_symbols(x)
    target, embedding = subgroup.to_group()
    if x.ambient is not target:
        raise StructureMismatchError(f"element does not live in the group of {subgroup.render()}.")
    return _push(embedding, x)


def op_iso(f: GroupMap, x: TElement) -> TElement:
    """Transport along an isomorphism: ``Ind_L k_lambda -> Ind_{f(L)} k_{lambda o f^-1}``."""
    _require_symbols(x)
    if not f.bijective:
        raise StructureMismatchError("transport needs an isomorphism.")
    if x.ambient is not f.source:
        raise StructureMismatchError("element does not live in the source of the isomorphism.")
    return _push(f, x)


def _push(f: GroupMap, x: TElement) -> TElement:
    terms = []
    for symbol, coefficient in x.terms.items():
        image = f.image(symbol.L)
        exponents = {f(y): e for y, e in symbol.character.items()}
        terms.append((symbol_from_function(f.target, image, symbol.modulus, exponents), coefficient))
    return TElement.from_combination(f.target, x.p, terms)


def op_inf(presentation: QuotientPresentation, x: TElement) -> TElement:
    """Inflation from ``G/N``: ``Ind_X k_phi -> Ind_{preimage X} k_{phi o proj}``."""
    _require_symbols(x)
    if x.ambient is not presentation.quotient:
        raise StructureMismatchError("element does not live in the quotient group.")
    projection = presentation.projection
    terms = []
    for symbol, coefficient in x.terms.items():
        character = symbol.character
        preimage = presentation.preimage(symbol.L)
        exponents = {g: character[projection(g)] for g in preimage}
        terms.append((symbol_from_function(presentation.parent, preimage, symbol.modulus, exponents), coefficient))
    return TElement.from_combination(presentation.parent, x.p, terms)


def op_def(presentation: QuotientPresentation, x: TElement) -> TElement:
    """
    Deflation to ``G/N``: ``Ind_L k_lambda -> Ind_{LN/N} k_lambda_bar`` if ``lambda`` is trivial on ``L ∩ N``, else 0.
    """
    _require_symbols(x)
    if x.ambient is not presentation.parent:
        raise StructureMismatchError("element does not live in the parent group of the quotient.")
    projection = presentation.projection
    kernel = set(presentation.kernel.elements)
    terms = []
    for symbol, coefficient in x.terms.items():
        character = symbol.character
        if any(character[y] for y in symbol.L if y in kernel):
            continue
        exponents = {projection(y): e for y, e in character.items()}
        image = presentation.image(symbol.L)
        terms.append((symbol_from_function(presentation.quotient, image, symbol.modulus, exponents), coefficient))
    return TElement.from_combination(presentation.quotient, x.p, terms)


def restriction_rhs(subgroup: Subgroup, pair: Pair) -> SpeciesVector:
    """Sum of ``F^H_{Q,t}`` over the ``H``-classes of ``G``-conjugates of ``pair`` lying in ``H``."""
    target, embedding = subgroup.to_group()
    classes = enumerate_pairs(target, pair.p)
    ambient_classes = enumerate_pairs(pair.ambient, pair.p)
    wanted = ambient_classes.locate(pair)
    hits = [i for i, local in enumerate(classes) if ambient_classes.locate(local.transport(embedding)) == wanted]
    return SpeciesVector.indicator(classes, hits)


def pair_stabilizer_index(subgroup: Subgroup, pair: Pair) -> int:
    """``|N_G(Q,t) : N_H(Q,t)|`` for a pair of the standalone group of ``subgroup``."""
    _, embedding = subgroup.to_group()
    embedded = pair.transport(embedding)
    return pair_stabilizer(subgroup.parent, embedded.P, embedded.s).order // pair_stabilizer(
        pair.ambient, pair.P, pair.s
    ).order


def induction_rhs(subgroup: Subgroup, pair: Pair) -> SpeciesVector:
    """``|N_G(Q,t) : N_H(Q,t)| F^G_{Q,t}``."""
    _, embedding = subgroup.to_group()
    classes = enumerate_pairs(subgroup.parent, pair.p)
    return SpeciesVector.indicator(
        classes, [classes.locate(pair.transport(embedding))], pair_stabilizer_index(subgroup, pair)
    )


def project_pair(presentation: QuotientPresentation, pair: Pair) -> Pair:
    """``(PN/N, sN)``."""
    return Pair(presentation.quotient, presentation.image(pair.P), presentation.projection(pair.s), pair.p)


def inflation_rhs(presentation: QuotientPresentation, pair: Pair) -> SpeciesVector:
    """Sum of ``F^G_{Q,t}`` over the ``G``-classes with ``(QN/N, tN)`` conjugate to ``pair`` in ``G/N``."""
    classes = enumerate_pairs(presentation.parent, pair.p)
    quotient_classes = enumerate_pairs(presentation.quotient, pair.p)
    wanted = quotient_classes.locate(pair)
    hits = [i for i, c in enumerate(classes) if quotient_classes.locate(project_pair(presentation, c)) == wanted]
    return SpeciesVector.indicator(classes, hits)


def deflation_rhs(presentation: QuotientPresentation, pair: Pair) -> SpeciesVector:
    """
    ``c F^{G/N}_{PN/N, sN}``, the deflation of ``F^G_{P,s}``.

    For a pair generating ``G`` the constant is ``m_{P,s,N}``. Otherwise, with ``L = <Ps>``, ``F^G_{P,s}`` is induced
    from ``F^L_{P,s}`` and ``Def^G_{G/N} Ind^G_L = Ind^{G/N}_{LN/N} Iso Def^L_{L/(L ∩ N)}``, so

    ``c = m_{P,s,L ∩ N} |N_{G/N}(PN/N, sN) : N_{LN/N}(PN/N, sN)| / |N_G(P,s) : N_L(P,s)|``.
    """
    group, kernel = presentation.parent, presentation.kernel
    classes = enumerate_pairs(presentation.quotient, pair.p)
    image = project_pair(presentation, pair)
    if pair.span.order == group.order:
        constant = deflation_constant(pair, kernel)
    else:
        local = PairGroup.of(pair)
        lookup = local.embedding.lookup()
        members = set(kernel.elements)
        local_kernel = Subgroup(local.group, tuple(sorted(lookup[x] for x in pair.span if x in members)), check=False)
        above = pair_stabilizer(presentation.quotient, image.P, image.s)
        below = pair_stabilizer(group, pair.P, pair.s)
        up = above.order // above.meet(presentation.image(pair.span)).order
        down = below.order // below.meet(pair.span).order
        constant = deflation_constant(local.local, local_kernel) * Fraction(up, down)
    return SpeciesVector.indicator(classes, [classes.locate(image)], constant)


def _vertex_is_diagonal(product: DirectProduct, stabilizer: tuple[int, ...], p: int) -> bool:
    group, embedding = Subgroup(product, stabilizer, check=False).to_group()
    vertex = embedding.image(sylow_subgroup(group, p))
    return is_twisted_diagonal(product, vertex)


def deflation_bimodule_is_diagonal(presentation: QuotientPresentation, p: int) -> bool:
    """
    Whether the ``(k[G/N], kG)``-bimodule ``k[G/N]`` has twisted diagonal vertices.

    A maximal vertex is a Sylow p-subgroup of the stabiliser ``{(aN, b) : a b^-1 in N}`` of the coset ``N``.
    """
    product = DirectProduct(presentation.quotient, presentation.parent)
    projection = presentation.projection
    stabilizer = tuple(sorted(product.pair(projection(b), b) for b in presentation.parent.elements))
    return _vertex_is_diagonal(product, stabilizer, p)


def inflation_bimodule_is_diagonal(presentation: QuotientPresentation, p: int) -> bool:
    """The transposed statement for the ``(kG, k[G/N])``-bimodule ``k[G/N]``."""
    product = DirectProduct(presentation.parent, presentation.quotient)
    projection = presentation.projection
    stabilizer = tuple(sorted(product.pair(b, projection(b)) for b in presentation.parent.elements))
    return _vertex_is_diagonal(product, stabilizer, p)


def tensor_over(bimodule: TElement, module: TElement) -> TElement:
    """
    ``X ⊗_{kG} M`` for ``X`` over ``H x G`` and ``M`` over ``G``, term by term through the Mackey formula.

    ``Ind_X k_lambda ⊗ Ind_L k_mu`` is the sum over ``g`` in ``p_2(X) \\ G / L`` of ``Ind_{p_1(Y)}^H k_alpha`` with
    ``Y = X ∩ (H x gLg^-1)`` and ``alpha(h, x) = lambda(h, x) mu(g^-1 x g)``, dropping the terms where ``alpha`` is
    non-trivial on ``Y ∩ (1 x G)``.
    """
    _require_symbols(bimodule)
    _require_symbols(module)
    product = bimodule.ambient
    if not isinstance(product, DirectProduct) or product.second is not module.ambient:
        raise StructureMismatchError("the bimodule must live in H x G with G the group of the module.")
    if bimodule.p != module.p:
        raise StructureMismatchError("bimodule and module use different primes.")
    first, second = product.first, product.second
    terms: list[tuple[MonomialSymbol, CycloNum]] = []
    for x_symbol, x_coefficient in bimodule.terms.items():
        x_character = x_symbol.character
        projected = product.project_second(x_symbol.L)
        for m_symbol, m_coefficient in module.terms.items():
            m_character = m_symbol.character
            modulus = math.lcm(x_symbol.modulus, m_symbol.modulus)
            x_scale, m_scale = modulus // x_symbol.modulus, modulus // m_symbol.modulus
            for g in double_coset_representatives(projected, m_symbol.L):
                conjugated = set(second.conjugation_table[g, m_symbol.L.array].tolist())
                g_inv = second.inv(g)
                alpha = {
                    y: x_character[y] * x_scale + m_character[second.conjugate(g_inv, product.p2(y))] * m_scale
                    for y in x_symbol.L
                    if product.p2(y) in conjugated
                }
                if any(e % modulus for y, e in alpha.items() if product.p1(y) == 0):
                    continue
                exponents = {product.p1(y): e for y, e in alpha.items()}
                image = Subgroup(first, tuple(exponents), check=False)
                symbol = symbol_from_function(first, image, modulus, exponents)
                terms.append((symbol, x_coefficient * m_coefficient))
    return TElement.from_combination(first, module.p, terms)
