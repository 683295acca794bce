# coding=utf-8
# Copyright (c) dppf contributors
"""
Monomial module symbols ``Ind_L^G k_lambda`` and their species.

A linear character ``lambda`` of ``L`` with p'-order image is stored as an exponent map ``L -> Z/m``: the value at
``x`` is ``zeta_m ** exponent(x)`` under the fixed Brauer lift. Characters are kept with ``m`` equal to their order.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

import numpy as np

from dppf._exceptions import StructureMismatchError
from dppf.cyclo import CycloNum, RootOfUnity
from dppf.groups import Group, Subgroup
from dppf.pairs import Pair


@dataclass(frozen=True, eq=False)
class MonomialSymbol:
    """
    The module ``Ind_L^G k_lambda``.

    Parameters
    ----------
    ambient : Group
    L : Subgroup
    modulus : int
        Order of the character.
    exponents : tuple of int
        ``exponents[i]`` is the exponent of ``lambda`` at ``L.elements[i]``.
    """

    ambient: Group
    L: Subgroup
    modulus: int
    exponents: tuple[int, ...]
    check: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        exponents = tuple(int(e) % self.modulus for e in self.exponents)
        divisor = functools.reduce(math.gcd, exponents, self.modulus)
        object.__setattr__(self, "modulus", self.modulus // divisor)
        object.__setattr__(self, "exponents", tuple(e // divisor for e in exponents))
        if not self.check:
            return
        if self.L.parent is not self.ambient:
            raise StructureMismatchError(f"L = {self.L.render()} does not live in '{self.ambient.name}'.")
        if len(self.exponents) != self.L.order:
            raise StructureMismatchError(f"character needs {self.L.order} values, got {len(self.exponents)}.")
        value = dict(zip(self.L.elements, self.exponents))
        for a in self.L:
            for b in self.L:
                if value[self.ambient.mul(a, b)] != (value[a] + value[b]) % self.modulus:
                    raise StructureMismatchError(f"character is not a homomorphism at ({a}, {b}).")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialSymbol):
            return NotImplemented
        return (
            self.ambient is other.ambient
            and self.L == other.L
            and self.modulus == other.modulus
            and self.exponents == other.exponents
        )

    def __hash__(self) -> int:
        return hash((id(self.ambient), self.L.elements, self.modulus, self.exponents))

    @property
    def character(self) -> dict[int, int]:
        return dict(zip(self.L.elements, self.exponents))

    def value(self, x: int) -> RootOfUnity:
        return RootOfUnity(self.modulus, self.character[x])

    def is_trivial_character(self) -> bool:
        return self.modulus == 1

    def check_prime(self, p: int) -> None:
        """The character must have p'-order, so its kernel contains every p-element of ``L``."""
        if self.modulus % p == 0:
            raise StructureMismatchError(f"character of order {self.modulus} is not a {p}'-character.")

    def render(self) -> str:
        if self.is_trivial_character():
            return f"Ind_{self.L.render()} k"
        return f"Ind_{self.L.render()} k[{','.join(str(e) for e in self.exponents)} mod {self.modulus}]"

    def __repr__(self) -> str:
        return f"MonomialSymbol({self.render()})"


def symbol_from_function(
    ambient: Group, L: Subgroup, modulus: int, exponent: Callable[[int], int] | Mapping[int, int]
) -> MonomialSymbol:
    get = exponent.__getitem__ if isinstance(exponent, Mapping) else exponent
    return MonomialSymbol(ambient, L, modulus, tuple(get(x) for x in L))


def trivial_symbol(ambient: Group, L: Subgroup) -> MonomialSymbol:
    return MonomialSymbol(ambient, L, 1, (0,) * L.order, check=False)


@functools.lru_cache(maxsize=1024)
def span_exponents(pair: Pair) -> dict[int, int]:
    """For ``g = x s^i`` in ``<Ps>`` with ``x`` in ``P``, the exponent ``i`` modulo ``ord(s)``."""
    group = pair.ambient
    result = {}
    for i in range(pair.s_order):
        power = group.power(pair.s, i)
        for x in pair.P:
            result[group.mul(x, power)] = i
    return result


def pair_character_symbol(pair: Pair, L: Subgroup, exponent: int) -> MonomialSymbol:
    """
    ``Ind_L^G k_{L, phi}`` with ``L`` inside ``<Ps>`` and ``phi(s) = zeta_{ord(s)} ** exponent``.

    The character is ``k_{L, phi}(x s^i) = phi(s)^i``, the restriction of the inflation of ``phi`` to ``L``.
    """
    index = span_exponents(pair)
    return symbol_from_function(pair.ambient, L, pair.s_order, lambda x: exponent * index[x])


@functools.lru_cache(maxsize=4096)
def left_coset_representatives(L: Subgroup) -> tuple[int, ...]:
    """Least element of every left coset ``xL``."""
    group = L.parent
    covered = np.zeros(group.order, dtype=bool)
    reps = []
    for x in group.elements:
        if covered[x]:
            continue
        covered[group.table[x, L.array]] = True
        reps.append(x)
    return tuple(reps)


@functools.lru_cache(maxsize=4096)
def double_coset_representatives(H: Subgroup, L: Subgroup) -> tuple[int, ...]:
    """Least element of every double coset ``HxL``."""
    group = H.parent
    covered = np.zeros(group.order, dtype=bool)
    reps = []
    for x in group.elements:
        if covered[x]:
            continue
        covered[group.table[group.table[H.array[:, None], x], L.array[None, :]].ravel()] = True
        reps.append(x)
    return tuple(reps)


def species_of_monomial(symbol: MonomialSymbol, pair: Pair) -> CycloNum:
    """
    ``tau_{P,s}(Ind_L^G k_lambda)``.

    Sums ``lambda(x^-1 s x)`` over the cosets ``xL`` with ``x^-1 P x <= L`` and ``x^-1 s x`` in ``L``.
    """
    if symbol.ambient is not pair.ambient:
        raise StructureMismatchError("symbol and pair live in different groups.")
    symbol.check_prime(pair.p)
    group = symbol.ambient
    reps = np.array(left_coset_representatives(symbol.L), dtype=np.int64)
    inverses = group.inverses[reps]
    members = symbol.L.mask
    # conjugated[i, j] = x_i^-1 P_j x_i
    conjugated = group.conjugation_table[inverses[:, None], pair.P.array[None, :]]
    conjugated_s = group.conjugation_table[inverses, pair.s]
    fixed = np.all(members[conjugated], axis=1) & members[conjugated_s]
    weights: dict[int, int] = {}
    character = symbol.character
    for y in conjugated_s[fixed]:
        e = character[int(y)]
        weights[e] = weights.get(e, 0) + 1
    return CycloNum.from_exponents(symbol.modulus, weights)


def working_modulus(group: Group, p: int) -> int:
    """Least common multiple of the orders of the p'-elements of ``group``."""
    return math.lcm(*(int(n) for n in group.element_orders if n % p))


def characters_of_cyclic(order: int) -> Iterable[int]:
    """Exponents ``e`` of the characters ``s -> zeta_order ** e`` of a cyclic group."""
    return range(order)
