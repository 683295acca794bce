# coding=utf-8
# Copyright (c) dppf contributors
"""Permutation input: cycle notation and closure of permutation generators into a table."""
from __future__ import annotations

import re
from typing import Sequence

import numpy as np

from dppf._exceptions import GroupFormatError
from dppf.groups._group import MAX_TABLE_ORDER, Group, breadth_first_numbering
from dppf.types import Permutation

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_cycles(text: str, degree: int) -> Permutation:
    """
    Parse cycle notation such as ``"(1 2 3)(4 5)"`` with 1-based points into a 0-based image tuple.

    Raises
    ------
    GroupFormatError
        Names the offending token and its character position.
    """
    images = list(range(degree))
    seen: set[int] = set()
    cycle: list[int] | None = None
    for match in _TOKEN.finditer(text):
        token, position = match.group(), match.start()
        if token == "(":
            if cycle is not None:
                raise GroupFormatError("nested cycle", token, position)
            cycle = []
        elif token == ")":
            if cycle is None:
                raise GroupFormatError("unbalanced parenthesis", token, position)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
            cycle = None
        else:
            if cycle is None:
                raise GroupFormatError("point outside a cycle", token, position)
            if not token.isdigit():
                raise GroupFormatError("expected a positive integer point", token, position)
            point = int(token)
            if not 1 <= point <= degree:
                raise GroupFormatError(f"point out of range 1..{degree}", token, position)
            if point - 1 in seen:
                raise GroupFormatError("point repeated, cycles must be disjoint", token, position)
            seen.add(point - 1)
            cycle.append(point - 1)
    if cycle is not None:
        raise GroupFormatError("unterminated cycle", text.strip()[-1:] or text, len(text))
    return tuple(images)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The product ``a*b``, applying ``b`` first."""
    return tuple(a[x] for x in b)


def from_permutation_generators(
    degree: int,
    generators: Sequence[Permutation | str],
    name: str | None = None,
    max_order: int = MAX_TABLE_ORDER,
) -> Group:
    """
    Close permutation generators into a :class:`Group`.

    Elements are numbered breadth-first from the identity, multiplying by the generators in the given order.

    Parameters
    ----------
    degree : int
        Number of points.
    generators : sequence
        Image tuples on ``0..degree-1`` or cycle strings on ``1..degree``.
    name : str, optional
        Label; defaults to a rendering of the input.
    max_order : int
        Bound on the order of the generated group.
    """
    if degree < 1:
        raise GroupFormatError("degree must be a positive integer", str(degree))
    perms: list[Permutation] = []
    for gen in generators:
        if isinstance(gen, str):
            perms.append(parse_cycles(gen, degree))
            continue
        perm = tuple(int(x) for x in gen)
        if len(perm) != degree or sorted(perm) != list(range(degree)):
            raise GroupFormatError(f"not a permutation of 0..{degree - 1}", str(gen))
        perms.append(perm)

    label = name if name is not None else f"<{', '.join(str(g) for g in generators)}> on {degree} points"
    identity = tuple(range(degree))
    elements = breadth_first_numbering(identity, perms, compose, max_order=max_order, name=label)
    index = {perm: i for i, perm in enumerate(elements)}
    table = np.array([[index[compose(a, b)] for b in elements] for a in elements], dtype=np.int64)
    return Group(table, name=label, max_order=max_order)
