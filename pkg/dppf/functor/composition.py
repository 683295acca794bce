# coding=utf-8
# Copyright (c) dppf contributors
"""
Composition ``F^{HxG}_{Q,t} ⊗_{kG} F^G_{P,s}`` in the diagonal category.

The closed form is evaluated in :func:`compose_idempotents`. :func:`compose_via_tensor` computes the same product
symbol by symbol through :func:`dppf.ppring.tensor_over`, and :func:`identity_bimodule_check` decomposes the identity
bimodule ``kG`` into diagonal idempotents and checks that it acts as the identity.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from dppf._exceptions import PairError
from dppf.cyclo import CycloNum
from dppf.groups import DirectProduct, Group, Subgroup, centralizer, pair_stabilizer
from dppf.groups.subgroups import are_conjugate
from dppf.pairs import DiagonalPair, Pair, enumerate_diagonal_pairs
from dppf.ppring import SpeciesVector, TElement, idempotent_v1, species_of_monomial, tensor_over, trivial_symbol
from dppf.ppring.idempotents import stable_moebius, stable_subgroups
from dppf.ppring.symbols import MonomialSymbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalForm:
    """``(Q', t')`` conjugate to ``(Q, t)`` under ``1 x G`` with ``t' = (u, s^j)``."""

    Q: Subgroup
    t: int
    u: int
    j: int
    eta: dict[int, int]


def _check_pair(product: DirectProduct, pair: Pair) -> None:
    if product.second is not pair.ambient:
        raise PairError(f"{pair.render()} does not live in the second factor '{product.second.name}'.")
    if pair.span.order != pair.ambient.order:
        raise PairError(f"{pair.render()} does not generate '{pair.ambient.name}'.")


def support_obstruction(dq: DiagonalPair, pair: Pair) -> str | None:
    """The reason the composition vanishes by its support conditions, or ``None``."""
    product = dq.ambient
    _check_pair(product, pair)
    span = dq.pair.span
    if product.project_second(span).order != pair.ambient.order:
        return "p_2(<Qt>) != G"
    if _normal_form(dq, pair) is None:
        return "no conjugate of t has second coordinate in <s>"
    return None


def _normal_form(dq: DiagonalPair, pair: Pair) -> NormalForm | None:
    product = dq.ambient
    group = pair.ambient
    powers = {group.power(pair.s, i): i for i in range(pair.s_order)}
    u, v = product.split(dq.t)
    for g in group.elements:
        w = group.conjugate(g, v)
        if w not in powers:
            continue
        lift = product.pair(0, g)
        Q = Subgroup(product, tuple(product.conjugate(lift, x) for x in dq.Q), check=False)
        eta = {h: group.conjugate(g, x) for h, x in dq.eta.items()}
        return NormalForm(Q, product.pair(u, w), u, powers[w], eta)
    return None


def _extension_exponents(first: Group, J: Subgroup, u: int, exponent: int, modulus: int) -> dict[int, int]:
    """``x u^i -> i * exponent`` on ``<J u>``."""
    values: dict[int, int] = {}
    for i in range(first.element_order(u)):
        power = first.power(u, i)
        for x in J:
            values[first.mul(x, power)] = (i * exponent) % modulus
    return values


def compose_idempotents(dq: DiagonalPair, pair: Pair) -> TElement:
    """
    ``F^{HxG}_{Q,t} ⊗_{kG} F^G_{P,s}`` for ``G = <Ps>``, expanded in the symbols ``Ind_{<Ju>}^H k_{<Ju>,phi}``.

    After conjugating ``t`` to ``(u, s^j)`` the product is

    ``1/(|N_{HxG}(Q,t)| |C_G(s)|) sum phi(t^-1) psi(s^-1) |C_Q(t)| sum_J sigma(J) [Ind_{<Ju>}^H k_{<Ju>, phi'}]``

    over characters ``phi`` of ``<t>`` and ``psi`` of ``<s>`` with ``phi(t)^|u| psi(s)^(j|u|) = 1`` and the
    ``u``-stable ``J <= p_1(Q)``; ``phi'(u) = phi(t) psi(s)^j`` and ``sigma(J) = |C_{eta(J)}(s)| mu_s(eta(J), P)``
    when ``eta(J)`` is ``s``-stable, else 0.

    Raises
    ------
    PairError
        If ``pair`` does not generate the second factor.
    """
    product = dq.ambient
    first, second = product.first, product.second
    reason = support_obstruction(dq, pair)
    if reason is not None:
        logger.debug("Composition of %s with %s vanishes: %s.", dq.render(), pair.render(), reason)
        return TElement.zero(first, pair.p)
    form = _normal_form(dq, pair)
    assert form is not None

    stabilizer = pair_stabilizer(product, form.Q, form.t).order
    prefactor = Fraction(1, stabilizer * centralizer(second, [pair.s]).order)
    centralized = sum(1 for x in form.Q if product.commute(x, form.t))

    stable = {L.elements: L for L in stable_subgroups(pair)}
    mu = stable_moebius(pair)
    first_projection = product.project_first(form.Q)
    weights: list[tuple[Subgroup, int]] = []
    for J in first.subgroups:
        if not J.issubset(first_projection) or not J.is_normalized_by(form.u):
            continue
        image = tuple(sorted(form.eta[h] for h in J))
        if image not in stable:
            continue
        target = stable[image]
        sigma = sum(1 for x in target if second.commute(x, pair.s)) * mu(target, pair.P)
        if sigma:
            weights.append((J, sigma))

    order_t = product.element_order(form.t)
    n = pair.s_order
    order_u = first.element_order(form.u)
    modulus = math.lcm(order_t, n)
    terms: list[tuple[MonomialSymbol, CycloNum]] = []
    for a in range(order_t):
        for b in range(n):
            exponent = (a * (modulus // order_t) + b * form.j * (modulus // n)) % modulus
            if (exponent * order_u) % modulus:
                continue
            root = CycloNum.root(modulus, -(a * (modulus // order_t) + b * (modulus // n)))
            coefficient = root * prefactor * centralized
            for J, sigma in weights:
                extended = J.join([form.u])
                exponents = _extension_exponents(first, J, form.u, exponent, modulus)
                symbol = MonomialSymbol(first, extended, modulus, tuple(exponents[x] for x in extended))
                terms.append((symbol, coefficient * sigma))
    return TElement.from_combination(first, pair.p, terms)


def compose_via_tensor(dq: DiagonalPair, pair: Pair) -> TElement:
    """The same product through the symbol-level tensor product of the expanded idempotents."""
    _check_pair(dq.ambient, pair)
    return tensor_over(idempotent_v1(dq.pair), idempotent_v1(pair))


def support_holds(dq: DiagonalPair, pair: Pair, result: TElement) -> bool:
    """
    Whether the species of ``result`` vanish outside the pairs ``(P', s')`` allowed by the support conditions.

    A non-zero species needs ``P'`` conjugate to ``p_1(Q)`` in ``H`` and ``|s'| = |u|``.
    """
    if result.is_zero():
        return True
    form = _normal_form(dq, pair)
    if form is None:
        return False
    product = dq.ambient
    first = product.first
    projection = product.project_first(form.Q)
    order_u = first.element_order(form.u)
    for index in result.species.support():
        candidate = result.classes[index]
        if candidate.s_order != order_u or not are_conjugate(candidate.P, projection):
            return False
    return True


@dataclass(frozen=True, eq=False)
class CompositionCheck:
    """Two computations of the same species vector and whether they agree."""

    expected: SpeciesVector
    computed: SpeciesVector

    @property
    def agrees(self) -> bool:
        return self.expected == self.computed


def compare_composition(dq: DiagonalPair, pair: Pair) -> CompositionCheck:
    """Closed form against the tensor path; a disagreement is logged as a warning."""
    check = CompositionCheck(compose_via_tensor(dq, pair).species, compose_idempotents(dq, pair).species)
    if not check.agrees:
        logger.warning(
            "Composition formula disagrees with the tensor product for %s and %s.", dq.render(), pair.render()
        )
    return check


def identity_bimodule_species(group: Group, dq: DiagonalPair) -> CycloNum:
    """``tau_{Q,t}(Ind_{Delta G}^{GxG} k)``."""
    product = dq.ambient
    diagonal = Subgroup(product, tuple(product.pair(g, g) for g in group.elements), check=False)
    return species_of_monomial(trivial_symbol(product, diagonal), dq.pair)


def identity_bimodule_check(group: Group, pair: Pair) -> CompositionCheck:
    """``sum_{(Q,t)} tau_{Q,t}(kG) F_{Q,t} ⊗ F_{P,s}`` against ``F_{P,s}``."""
    total = TElement.zero(group, pair.p)
    for dq in enumerate_diagonal_pairs(group, group, pair.p):
        weight = identity_bimodule_species(group, dq)
        if weight.is_zero():
            continue
        total = total + compose_idempotents(dq, pair).scale(weight)
    check = CompositionCheck(idempotent_v1(pair).species, total.species)
    if not check.agrees:
        logger.warning("Identity bimodule does not act as the identity on %s in %s.", pair.render(), group.name)
    return check
