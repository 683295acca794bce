# coding=utf-8
# Copyright (c) dppf contributors
"""
Finite groups stored as explicit multiplication tables.

Elements are identifiers ``0..order-1`` and ``0`` is always the identity. All derived data (inverses, element orders,
conjugation table, conjugacy classes) is computed once at construction, so a :class:`Group` can be shared freely.
Subgroups are sorted tuples of identifiers of their parent group.
"""
from __future__ import annotations

import functools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np
import numpy.typing as npt

from dppf._exceptions import GroupError, GroupTooLargeError, StructureMismatchError

logger = logging.getLogger(__name__)

MAX_TABLE_ORDER = 512
MAX_PRODUCT_ORDER = 1024
MAX_ASSOCIATIVITY_CHECK = 128


class Group:
    """
    A finite group given by its multiplication table.

    Parameters
    ----------
    table : array-like
        Square table with ``table[a, b]`` the identifier of the product ``a*b``.
    name : str
        Human readable label.
    validate : bool
        Run the Latin-square and (for orders up to 128) associativity checks.
    max_order : int
        Upper bound on the order accepted.
    """

    def __init__(
        self,
        table: npt.ArrayLike,
        name: str = "",
        validate: bool = True,
        max_order: int = MAX_TABLE_ORDER,
    ):
        _table = np.array(table, dtype=np.int64)
        if _table.ndim != 2 or _table.shape[0] != _table.shape[1] or _table.shape[0] == 0:
            raise GroupError(f"table must be a non-empty square array, got shape {_table.shape}.", name or None)
        if _table.shape[0] > max_order:
            raise GroupTooLargeError(_table.shape[0], max_order, name or None)

        self._name = name
        self._table = _table
        if validate:
            self._validate()
        self._table.setflags(write=False)

        order = self.order
        rows, cols = np.nonzero(self._table == 0)
        inverses = np.empty(order, dtype=np.int64)
        inverses[rows] = cols
        self._inverses = inverses
        self._inverses.setflags(write=False)

        self._element_orders = self._compute_element_orders()
        # conjugates[g, x] = g x g^-1
        self._conjugates = self._table[self._table, inverses[:, None]]
        self._conjugates.setflags(write=False)
        self._classes = self._compute_classes()

    def _validate(self) -> None:
        order = self.order
        identifiers = np.arange(order)
        if np.any((self._table < 0) | (self._table >= order)):
            raise GroupError("table contains identifiers outside 0..order-1.", self._name or None)
        if not np.array_equal(self._table[0], identifiers) or not np.array_equal(self._table[:, 0], identifiers):
            raise GroupError(
                "row and column 0 must be the identity permutation (0 is the identity).", self._name or None
            )
        sorted_rows = np.sort(self._table, axis=1)
        sorted_cols = np.sort(self._table, axis=0)
        if not (np.all(sorted_rows == identifiers[None, :]) and np.all(sorted_cols == identifiers[:, None])):
            raise GroupError("Latin-square check failed: some row or column is not a permutation.", self._name or None)
        if order <= MAX_ASSOCIATIVITY_CHECK:
            # (ab)c against a(bc) for all triples at once.
            left = self._table[self._table[:, :, None], identifiers[None, None, :]]
            right = self._table[identifiers[:, None, None], self._table[None, :, :]]
            if not np.array_equal(left, right):
                a, b, c = (int(v[0]) for v in np.nonzero(left != right))
                raise GroupError(f"associativity check failed for the triple ({a}, {b}, {c}).", self._name or None)

    def _compute_element_orders(self) -> npt.NDArray[np.int64]:
        order = self.order
        orders = np.ones(order, dtype=np.int64)
        power = np.arange(order)
        done = power == 0
        exponent = 1
        while not np.all(done):
            power = self._table[power, np.arange(order)]
            exponent += 1
            hit = (power == 0) & ~done
            orders[hit] = exponent
            done |= hit
        orders[0] = 1
        orders.setflags(write=False)
        return orders

    def _compute_classes(self) -> tuple[tuple[int, ...], ...]:
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            orbit = np.unique(self._conjugates[:, x])
            seen[orbit] = True
            classes.append(tuple(int(y) for y in orbit))
        return tuple(classes)

    @property
    def order(self) -> int:
        return int(self._table.shape[0])

    @property
    def name(self) -> str:
        return self._name

    @property
    def table(self) -> npt.NDArray[np.int64]:
        return self._table

    @property
    def inverses(self) -> npt.NDArray[np.int64]:
        return self._inverses

    @property
    def element_orders(self) -> npt.NDArray[np.int64]:
        return self._element_orders

    @property
    def conjugation_table(self) -> npt.NDArray[np.int64]:
        """``conjugation_table[g, x]`` is ``g x g^-1``."""
        return self._conjugates

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Conjugacy classes, each sorted, ordered by their least element."""
        return self._classes

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def inv(self, a: int) -> int:
        return int(self._inverses[a])

    def power(self, a: int, k: int) -> int:
        k %= int(self._element_orders[a])
        result = 0
        base = a
        while k:
            if k & 1:
                result = int(self._table[result, base])
            base = int(self._table[base, base])
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        return int(self._element_orders[a])

    def conjugate(self, g: int, x: int) -> int:
        """Return ``g x g^-1``."""
        return int(self._conjugates[g, x])

    def conjugate_set(self, g: int, elements: Iterable[int]) -> tuple[int, ...]:
        arr = np.fromiter(elements, dtype=np.int64)
        return tuple(int(v) for v in np.sort(self._conjugates[g, arr]))

    def commute(self, a: int, b: int) -> bool:
        return bool(self._table[a, b] == self._table[b, a])

    def class_of(self, x: int) -> tuple[int, ...]:
        for cls in self._classes:
            if x in cls:
                return cls
        raise StructureMismatchError(f"element {x} is not in group '{self._name}'.")

    def generate(self, generators: Iterable[int]) -> tuple[int, ...]:
        """Sorted closure of a set of elements under multiplication."""
        gens = np.array(sorted({int(g) for g in generators} - {0}), dtype=np.int64)
        found = np.zeros(self.order, dtype=bool)
        found[0] = True
        if gens.size == 0:
            return (0,)
        frontier = np.array([0], dtype=np.int64)
        while frontier.size:
            fresh = np.unique(self._table[frontier[:, None], gens[None, :]].ravel())
            fresh = fresh[~found[fresh]]
            found[fresh] = True
            frontier = fresh
        return tuple(int(v) for v in np.nonzero(found)[0])

    def subgroup(self, generators: Iterable[int]) -> Subgroup:
        return Subgroup(self, self.generate(generators), check=False)

    @property
    def whole(self) -> Subgroup:
        return Subgroup(self, tuple(range(self.order)), check=False)

    @property
    def trivial(self) -> Subgroup:
        return Subgroup(self, (0,), check=False)

    @functools.cached_property
    def subgroups(self) -> tuple[Subgroup, ...]:
        # Prevent circular import
        from dppf.groups.subgroups import enumerate_subgroups

        return enumerate_subgroups(self)

    @functools.cached_property
    def center(self) -> Subgroup:
        central = np.all(self._conjugates == np.arange(self.order)[None, :], axis=0)
        return Subgroup(self, tuple(int(v) for v in np.nonzero(central)[0]), check=False)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Group(name={self._name!r}, order={self.order})"


@dataclass(frozen=True, eq=False)
class Subgroup:
    """
    A subgroup of ``parent`` given by its sorted element identifiers.

    Equality and hashing use the parent's identity together with the element tuple.
    """

    parent: Group
    elements: tuple[int, ...]
    check: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        elements = tuple(sorted({int(x) for x in self.elements}))
        object.__setattr__(self, "elements", elements)
        if self.check:
            self._validate()

    def _validate(self) -> None:
        name = self.parent.name or None
        if not self.elements or self.elements[0] != 0:
            raise GroupError("a subgroup must contain the identity.", name)
        if self.elements[-1] >= self.parent.order:
            raise GroupError(f"subgroup element {self.elements[-1]} is not in the parent group.", name)
        arr = np.array(self.elements, dtype=np.int64)
        members = np.zeros(self.parent.order, dtype=bool)
        members[arr] = True
        if not np.all(members[self.parent.table[arr[:, None], arr[None, :]]]):
            raise GroupError("subgroup is not closed under multiplication.", name)
        if not np.all(members[self.parent.inverses[arr]]):
            raise GroupError("subgroup is not closed under inverses.", name)
        if self.parent.order % len(self.elements) != 0:
            raise GroupError(f"subgroup order {len(self.elements)} does not divide {self.parent.order}.", name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def array(self) -> npt.NDArray[np.int64]:
        return np.array(self.elements, dtype=np.int64)

    @property
    def mask(self) -> npt.NDArray[np.bool_]:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[self.array] = True
        return mask

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def issubset(self, other: Subgroup) -> bool:
        return set(self.elements) <= set(other.elements)

    def conjugate(self, g: int) -> Subgroup:
        """Return ``g S g^-1``."""
        return Subgroup(self.parent, self.parent.conjugate_set(g, self.elements), check=False)

    def is_normal(self) -> bool:
        conj = self.parent.conjugation_table[:, self.array]
        return bool(np.all(self.mask[conj]))

    def is_normalized_by(self, g: int) -> bool:
        return bool(np.all(self.mask[self.parent.conjugation_table[g, self.array]]))

    def is_p_group(self, p: int) -> bool:
        order = self.order
        while order % p == 0:
            order //= p
        return order == 1

    def join(self, other: Subgroup | Iterable[int]) -> Subgroup:
        return self.parent.subgroup([*self.elements, *other])

    def meet(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.parent, tuple(sorted(set(self.elements) & set(other.elements))), check=False)

    def product_set(self, other: Subgroup | Sequence[int]) -> tuple[int, ...]:
        """The set ``S*T`` as sorted identifiers."""
        other_arr = np.array(tuple(other), dtype=np.int64)
        return tuple(int(v) for v in np.unique(self.parent.table[self.array[:, None], other_arr[None, :]]))

    def to_group(self) -> tuple[Group, GroupMap]:
        """The subgroup as a standalone :class:`Group` together with its embedding into the parent."""
        return _subgroup_as_group(self)

    def render(self) -> str:
        return "[" + ",".join(str(x) for x in self.elements) + "]"

    def __repr__(self) -> str:
        return f"Subgroup({self.render()} of {self.parent.name or 'group'})"


# Unbounded: ``to_group`` hands out the same group object for a subgroup on every call.
@functools.lru_cache(maxsize=None)
def _subgroup_as_group(subgroup: Subgroup) -> tuple[Group, GroupMap]:
    # Elements are renumbered by ascending parent identifier, so 0 stays the identity.
    arr = subgroup.array
    lookup = np.full(subgroup.parent.order, -1, dtype=np.int64)
    lookup[arr] = np.arange(len(arr))
    table = lookup[subgroup.parent.table[arr[:, None], arr[None, :]]]
    name = f"{subgroup.parent.name}{subgroup.render()}"
    group = Group(table, name=name, validate=False)
    embedding = GroupMap(group, subgroup.parent, tuple(int(x) for x in arr), bijective=False, check=False)
    return group, embedding


@dataclass(frozen=True, eq=False)
class GroupMap:
    """
    A homomorphism ``source -> target`` given by the images of all source identifiers.

    Parameters
    ----------
    source : Group
    target : Group
    images : tuple of int
        ``images[x]`` is the image of ``x``.
    bijective : bool
        Flag the map as an isomorphism; the bijection is checked.
    check : bool
        Verify the homomorphism property on all pairs of elements.
    """

    source: Group
    target: Group
    images: tuple[int, ...]
    bijective: bool = False
    check: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if len(self.images) != self.source.order:
            raise StructureMismatchError(f"map needs {self.source.order} images, got {len(self.images)}.")
        if self.check:
            if not self.is_homomorphism():
                raise StructureMismatchError("images do not respect multiplication.")
            if self.bijective and len(set(self.images)) != self.target.order:
                raise StructureMismatchError("map flagged bijective is not a bijection.")

    @property
    def array(self) -> npt.NDArray[np.int64]:
        return np.array(self.images, dtype=np.int64)

    def is_homomorphism(self) -> bool:
        img = self.array
        if img[0] != 0:
            return False
        lhs = img[self.source.table]
        rhs = self.target.table[img[:, None], img[None, :]]
        return bool(np.array_equal(lhs, rhs))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def image_of(self, elements: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted({self.images[x] for x in elements}))

    def image(self, subgroup: Subgroup | None = None) -> Subgroup:
        elements = self.images if subgroup is None else [self.images[x] for x in subgroup]
        return Subgroup(self.target, tuple(elements), check=False)

    def preimage(self, elements: Iterable[int]) -> tuple[int, ...]:
        wanted = set(elements)
        return tuple(x for x, y in enumerate(self.images) if y in wanted)

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, self.preimage([0]), check=False)

    def compose(self, other: GroupMap) -> GroupMap:
        """Return ``self o other``."""
        if other.target is not self.source:
            raise StructureMismatchError("cannot compose maps whose target and source differ.")
        return GroupMap(
            other.source,
            self.target,
            tuple(self.images[y] for y in other.images),
            bijective=self.bijective and other.bijective,
            check=False,
        )

    def inverse(self) -> GroupMap:
        if not self.bijective:
            raise StructureMismatchError("only bijective maps can be inverted.")
        inverse = [0] * self.target.order
        for x, y in enumerate(self.images):
            inverse[y] = x
        return GroupMap(self.target, self.source, tuple(inverse), bijective=True, check=False)

    def lookup(self) -> Mapping[int, int]:
        """Inverse lookup of an injective map, from target identifiers back to source identifiers."""
        return {y: x for x, y in enumerate(self.images)}


@dataclass(frozen=True, eq=False)
class QuotientPresentation:
    """``parent / kernel`` with the quotient numbered by least coset representatives."""

    parent: Group
    kernel: Subgroup
    quotient: Group
    projection: GroupMap
    representatives: tuple[int, ...]

    def lift(self, q: int) -> int:
        return self.representatives[q]

    def preimage(self, elements: Iterable[int]) -> Subgroup:
        return Subgroup(self.parent, self.projection.preimage(elements), check=False)

    def image(self, subgroup: Subgroup | Iterable[int]) -> Subgroup:
        return Subgroup(self.quotient, self.projection.image_of(subgroup), check=False)


class DirectProduct(Group):
    """
    The direct product ``H x G`` with the pair ``(h, g)`` encoded as ``h * |G| + g``.

    Products larger than the subgroup bound only support element-level operations.
    """

    def __init__(self, first: Group, second: Group):
        order = first.order * second.order
        if order > MAX_PRODUCT_ORDER:
            raise GroupTooLargeError(order, MAX_PRODUCT_ORDER, f"{first.name}x{second.name}")
        n = second.order
        first_big = np.repeat(np.repeat(first.table, n, axis=0), n, axis=1)
        second_big = np.tile(second.table, (first.order, first.order))
        super().__init__(
            first_big * n + second_big,
            name=f"{first.name}x{second.name}",
            validate=False,
            max_order=MAX_PRODUCT_ORDER,
        )
        self.first = first
        self.second = second

    def pair(self, h: int, g: int) -> int:
        return h * self.second.order + g

    def p1(self, x: int) -> int:
        return x // self.second.order

    def p2(self, x: int) -> int:
        return x % self.second.order

    def split(self, x: int) -> tuple[int, int]:
        return divmod(x, self.second.order)

    def project_first(self, elements: Iterable[int]) -> Subgroup:
        return Subgroup(self.first, tuple({self.p1(x) for x in elements}), check=False)

    def project_second(self, elements: Iterable[int]) -> Subgroup:
        return Subgroup(self.second, tuple({self.p2(x) for x in elements}), check=False)

    def first_kernel(self, elements: Iterable[int]) -> tuple[int, ...]:
        """``k_1(X) = {h : (h, 1) in X}``."""
        return tuple(sorted(self.p1(x) for x in elements if self.p2(x) == 0))

    def second_kernel(self, elements: Iterable[int]) -> tuple[int, ...]:
        """``k_2(X) = {g : (1, g) in X}``."""
        return tuple(sorted(self.p2(x) for x in elements if self.p1(x) == 0))


def breadth_first_numbering(
    identity: object, generators: Sequence[object], multiply, max_order: int, name: str = ""
) -> list:
    """
    Enumerate the closure of ``generators`` breadth-first from ``identity``.

    Products are ``multiply(element, generator)`` taken in generator order, which fixes the identifiers.
    """
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for gen in generators:
            product = multiply(current, gen)
            if product not in index:
                index[product] = len(elements)
                elements.append(product)
                if len(elements) > max_order:
                    raise GroupTooLargeError(len(elements), max_order, name or None)
                queue.append(product)
    return elements
