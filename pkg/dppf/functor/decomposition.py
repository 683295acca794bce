# coding=utf-8
# Copyright (c) dppf contributors
"""
Subfunctors ``e_{P,s}`` of the diagonal p-permutation functor and the simple functors they cut out.

Subfunctors are handled as sets of labels: a label is the isomorphism class of a D^Δ-pair, and the evaluation of the
subfunctor of a label at ``H`` is spanned by the idempotents ``F^H_{Q,t}`` whose pair reduces to the label.
"""
from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from dppf._exceptions import PairError
from dppf.groups import Group, catalog_group
from dppf.pairs import Pair, PairGroup, enumerate_pairs, is_ddelta, is_pprime_quotient, pairs_isomorphic, reduce_pair

logger = logging.getLogger(__name__)


class SimpleLabel:
    """
    The isomorphism class of a D^Δ-pair, stored through the reduction of any pair in it.

    Two labels are equal when their representatives are isomorphic pairs.
    """

    def __init__(self, pair: Pair):
        self.representative = reduce_pair(pair)
        if not is_ddelta(self.representative):
            raise PairError(f"reduction of {pair.render()} is not a D^Δ-pair.")

    @classmethod
    def trivial(cls, p: int) -> SimpleLabel:
        """The label of ``(1, 1)``."""
        group = catalog_group("C1")
        return cls(Pair(group, group.trivial, 0, p))

    @property
    def p(self) -> int:
        return self.representative.p

    @property
    def span_order(self) -> int:
        return self.representative.span.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleLabel):
            return NotImplemented
        return pairs_isomorphic(self.representative, other.representative)

    def __hash__(self) -> int:
        rep = self.representative
        return hash((rep.P.order, rep.s_order, rep.span.order, rep.p))

    def render(self) -> str:
        rep = self.representative
        return f"<|P|={rep.P.order}, |s|={rep.s_order}, |<Ps>|={rep.span.order}>"

    def __repr__(self) -> str:
        return f"SimpleLabel{self.render()}"


@dataclass(frozen=True)
class SubfunctorDescriptor:
    """A subfunctor of the diagonal functor as the set of labels ``(P, s)`` with ``e_{P,s}`` below it."""

    labels: frozenset[SimpleLabel] = field(default_factory=frozenset)

    @classmethod
    def of(cls, labels: Iterable[SimpleLabel]) -> SubfunctorDescriptor:
        return cls(frozenset(labels))

    def evaluate(self, group: Group, p: int) -> tuple[int, ...]:
        """Indices of the pair classes of ``group`` whose idempotents span the evaluation."""
        indices: set[int] = set()
        classes = enumerate_pairs(group, p)
        for label in self.labels:
            indices.update(classes.locate(pair) for pair in subfunctor_eval(label.representative, group))
        return tuple(sorted(indices))


def subfunctor_eval(pair: Pair, group: Group) -> list[Pair]:
    """The classes ``(Q, t)`` of ``group`` having the reduction of ``pair`` as a p'-quotient."""
    target = reduce_pair(pair)
    return [c for c in enumerate_pairs(group, pair.p) if is_pprime_quotient(target, c)]


def functor_decomposition(group: Group, p: int) -> dict[SimpleLabel, tuple[int, ...]]:
    """
    Partition of the pair classes of ``group`` by the label of their reduction.

    Blocks are listed in the order of their first class; block sizes are the dimensions of the simple functors at
    ``group``.
    """
    return dict(_blocks(group, p))


@functools.lru_cache(maxsize=256)
def _blocks(group: Group, p: int) -> tuple[tuple[SimpleLabel, tuple[int, ...]], ...]:
    blocks: dict[SimpleLabel, list[int]] = {}
    for index, pair in enumerate(enumerate_pairs(group, p)):
        blocks.setdefault(SimpleLabel(pair), []).append(index)
    logger.debug("Group %s at p=%d splits into %d blocks.", group.name, p, len(blocks))
    return tuple((label, tuple(indices)) for label, indices in blocks.items())


def simple_dim(label: SimpleLabel, group: Group) -> int:
    if label.span_order > group.order:
        return 0
    return len(functor_decomposition(group, label.p).get(label, ()))


def s11_dim(group: Group, p: int) -> int:
    """Number of conjugacy classes of p'-elements."""
    return sum(1 for c in group.classes if group.element_order(c[0]) % p)


def W_dimension(label: SimpleLabel) -> int:
    """Number of classes ``(Q', t')`` isomorphic to the label pair with ``<Q't'> = <Ps>``, taken in ``<Ps>``."""
    local = PairGroup.of(label.representative)
    return sum(
        1
        for c in enumerate_pairs(local.group, label.p)
        if c.span.order == local.group.order and pairs_isomorphic(c, local.local)
    )


def minimal_group_check(label: SimpleLabel, universe: Sequence[Group]) -> bool:
    """
    The smallest group of ``universe`` with a non-zero evaluation has order ``|<Ps>|``, and there the block is made of
    the classes isomorphic to the label pair.
    """
    for group in sorted(universe, key=lambda g: g.order):
        block = functor_decomposition(group, label.p).get(label)
        if not block:
            continue
        classes = enumerate_pairs(group, label.p)
        if group.order != label.span_order:
            logger.warning("Label %s first appears at %s of order %d.", label.render(), group.name, group.order)
            return False
        return all(pairs_isomorphic(classes[i], label.representative) for i in block)
    return False


@dataclass(frozen=True)
class LatticeReport:
    """
    Outcome of checking that label sets and subfunctor evaluations determine each other.

    ``failures`` lists the label subsets ``A`` (as label indices) with ``Theta(Psi(A)) != A``.
    """

    groups: tuple[str, ...]
    labels: tuple[SimpleLabel, ...]
    subsets_checked: int
    failures: tuple[tuple[int, ...], ...]

    @property
    def holds(self) -> bool:
        return not self.failures


def lattice_check(universe: Sequence[Group], labels: Sequence[SimpleLabel]) -> LatticeReport:
    """
    Evaluate every subset ``A`` of ``labels`` on ``universe`` and recover ``A`` from the evaluations.

    ``Psi(A)`` is the union over ``A`` of the evaluations; ``Theta`` returns the labels whose own evaluation lies
    inside a given one. The span group of every label is added to the universe so that each label is seen somewhere.
    """
    groups = list(universe) + [PairGroup.of(label.representative).group for label in labels]
    unique = list(dict.fromkeys(labels))
    single = []
    for label in unique:
        descriptor = SubfunctorDescriptor.of([label])
        single.append(
            frozenset(
                (i, label.p, index) for i, group in enumerate(groups) for index in descriptor.evaluate(group, label.p)
            )
        )

    failures = []
    checked = 0
    for size in range(len(unique) + 1):
        for subset in itertools.combinations(range(len(unique)), size):
            checked += 1
            evaluation = frozenset().union(*(single[i] for i in subset))
            recovered = tuple(i for i in range(len(unique)) if single[i] <= evaluation)
            if recovered != subset:
                failures.append(subset)
    return LatticeReport(tuple(g.name for g in groups), tuple(unique), checked, tuple(failures))
