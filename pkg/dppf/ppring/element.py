# coding=utf-8
# Copyright (c) dppf contributors
"""Elements of the ring of p-permutation modules with cyclotomic coefficients, and their species coordinates."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from dppf._exceptions import StructureMismatchError
from dppf.cyclo import CycloNum, Scalar, as_cyclo
from dppf.groups import Group
from dppf.pairs import PairClasses, enumerate_pairs
from dppf.ppring.symbols import MonomialSymbol, species_of_monomial, trivial_symbol


@dataclass(frozen=True, eq=False)
class SpeciesVector:
    """Values of all species, indexed by the pair classes of the group in enumeration order."""

    index: PairClasses
    values: tuple[CycloNum, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.index):
            raise StructureMismatchError(f"expected {len(self.index)} species values, got {len(self.values)}.")

    @classmethod
    def constant(cls, index: PairClasses, value: Scalar) -> SpeciesVector:
        return cls(index, tuple(as_cyclo(value) for _ in range(len(index))))

    @classmethod
    def indicator(cls, index: PairClasses, positions: Iterable[int], value: Scalar = 1) -> SpeciesVector:
        chosen = set(positions)
        return cls(index, tuple(as_cyclo(value if i in chosen else 0) for i in range(len(index))))

    def _check(self, other: SpeciesVector) -> None:
        if other.index != self.index:
            raise StructureMismatchError("species vectors of different groups or primes.")

    def __add__(self, other: SpeciesVector) -> SpeciesVector:
        self._check(other)
        return SpeciesVector(self.index, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: SpeciesVector) -> SpeciesVector:
        self._check(other)
        return SpeciesVector(self.index, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other: SpeciesVector | Scalar) -> SpeciesVector:
        if isinstance(other, SpeciesVector):
            self._check(other)
            return SpeciesVector(self.index, tuple(a * b for a, b in zip(self.values, other.values)))
        factor = as_cyclo(other)
        return SpeciesVector(self.index, tuple(a * factor for a in self.values))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpeciesVector):
            return NotImplemented
        return other.index == self.index and all(a == b for a, b in zip(self.values, other.values))

    __hash__ = None  # type: ignore

    def __getitem__(self, i: int) -> CycloNum:
        return self.values[i]

    def __iter__(self) -> Iterator[CycloNum]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def support(self) -> list[int]:
        return [i for i, v in enumerate(self.values) if not v.is_zero()]

    def is_zero(self) -> bool:
        return not self.support()


class TElement:
    """
    A finite combination of monomial symbols with cyclotomic coefficients, an element of ``F T(G)``.

    Elements compare through their species vectors, which are computed on first use and then kept. Products of two
    elements are known only by species (``terms`` is ``None``); biset operations need the symbols.

    Parameters
    ----------
    ambient : Group
    p : int
    terms : mapping, optional
        ``{symbol: coefficient}``.
    species : SpeciesVector, optional
        Species of a symbol-less element.
    """

    def __init__(
        self,
        ambient: Group,
        p: int,
        terms: Mapping[MonomialSymbol, Scalar] | None = None,
        species: SpeciesVector | None = None,
    ):
        self.ambient = ambient
        self.p = p
        self._species = species
        if terms is None:
            if species is None:
                raise StructureMismatchError("an element needs symbols or a species vector.")
            self._terms: dict[MonomialSymbol, CycloNum] | None = None
            return
        collected: dict[MonomialSymbol, CycloNum] = {}
        for symbol, coefficient in terms.items():
            if symbol.ambient is not ambient:
                raise StructureMismatchError(f"symbol {symbol.render()} lives outside '{ambient.name}'.")
            symbol.check_prime(p)
            value = as_cyclo(coefficient)
            if not value.is_zero():
                collected[symbol] = value
        self._terms = collected

    @classmethod
    def zero(cls, ambient: Group, p: int) -> TElement:
        return cls(ambient, p, {})

    @classmethod
    def from_symbol(cls, symbol: MonomialSymbol, p: int, coefficient: Scalar = 1) -> TElement:
        return cls(symbol.ambient, p, {symbol: coefficient})

    @classmethod
    def trivial(cls, ambient: Group, p: int) -> TElement:
        """``[k] = Ind_G^G k``, the identity of the ring."""
        return cls.from_symbol(trivial_symbol(ambient, ambient.whole), p)

    @classmethod
    def regular(cls, ambient: Group, p: int) -> TElement:
        """``[kG] = Ind_1^G k``."""
        return cls.from_symbol(trivial_symbol(ambient, ambient.trivial), p)

    @classmethod
    def from_combination(cls, ambient: Group, p: int, terms: Iterable[tuple[MonomialSymbol, Scalar]]) -> TElement:
        collected: dict[MonomialSymbol, CycloNum] = {}
        for symbol, coefficient in terms:
            collected[symbol] = collected.get(symbol, CycloNum.zero()) + as_cyclo(coefficient)
        return cls(ambient, p, collected)

    @property
    def has_symbols(self) -> bool:
        return self._terms is not None

    @property
    def terms(self) -> dict[MonomialSymbol, CycloNum]:
        if self._terms is None:
            raise StructureMismatchError("element is only known through its species; symbols are unavailable.")
        return dict(self._terms)

    @property
    def classes(self) -> PairClasses:
        return enumerate_pairs(self.ambient, self.p)

    @property
    def species(self) -> SpeciesVector:
        if self._species is None:
            classes = self.classes
            values = []
            for pair in classes:
                total = CycloNum.zero()
                for symbol, coefficient in self.terms.items():
                    value = species_of_monomial(symbol, pair)
                    if not value.is_zero():
                        total = total + coefficient * value
                values.append(total)
            self._species = SpeciesVector(classes, tuple(values))
        return self._species

    def _check(self, other: TElement) -> None:
        if other.ambient is not self.ambient or other.p != self.p:
            raise StructureMismatchError("elements of different groups or primes.")

    def __add__(self, other: TElement) -> TElement:
        if not isinstance(other, TElement):
            return NotImplemented
        self._check(other)
        if self.has_symbols and other.has_symbols:
            return TElement.from_combination(
                self.ambient, self.p, [*self.terms.items(), *other.terms.items()]
            )
        return TElement(self.ambient, self.p, species=self.species + other.species)

    def __neg__(self) -> TElement:
        return self.scale(-1)

    def __sub__(self, other: TElement) -> TElement:
        if not isinstance(other, TElement):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> TElement:
        factor_ = as_cyclo(factor)
        if self.has_symbols:
            return TElement(self.ambient, self.p, {s: c * factor_ for s, c in self.terms.items()})
        return TElement(self.ambient, self.p, species=self.species * factor_)

    def __mul__(self, other: TElement | Scalar) -> TElement:
        """Scalar multiple, or the ring product computed pointwise on species."""
        if isinstance(other, TElement):
            self._check(other)
            return TElement(self.ambient, self.p, species=self.species * other.species)
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> TElement:
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TElement):
            return NotImplemented
        return self.ambient is other.ambient and self.p == other.p and self.species == other.species

    __hash__ = None  # type: ignore

    def is_zero(self) -> bool:
        if self.has_symbols and not self._terms:
            return True
        return self.species.is_zero()

    def render(self) -> str:
        if not self.has_symbols:
            return "species[" + ", ".join(str(v) for v in self.species) + "]"
        if not self._terms:
            return "0"
        return " + ".join(f"({c.render()})*[{s.render()}]" for s, c in self.terms.items())

    def __repr__(self) -> str:
        return f"TElement({self.render()} over {self.ambient.name} at p={self.p})"
