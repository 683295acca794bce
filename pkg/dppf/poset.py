# coding=utf-8
# Copyright (c) dppf contributors
"""Möbius functions of finite posets of subgroups."""
from __future__ import annotations

from typing import Hashable, Sequence

import numpy as np

from dppf._exceptions import StructureMismatchError
from dppf.groups import Subgroup


class MoebiusFunction:
    """
    The Möbius function of a finite poset, computed by downward recursion and memoised per upper element.

    For a fixed top ``T`` this uses ``mu(T, T) = 1`` and ``mu(x, T) = -sum(mu(y, T) for x < y <= T)``.

    Parameters
    ----------
    nodes : sequence
        The elements of the poset.
    leq : numpy.ndarray
        Boolean matrix with ``leq[i, j]`` true iff ``nodes[i] <= nodes[j]``.
    """

    def __init__(self, nodes: Sequence[Hashable], leq: np.ndarray):
        self._nodes = list(nodes)
        self._index = {node: i for i, node in enumerate(self._nodes)}
        self._leq = np.asarray(leq, dtype=bool)
        if self._leq.shape != (len(self._nodes), len(self._nodes)):
            raise StructureMismatchError("order relation does not match the number of nodes.")
        if not np.all(np.diag(self._leq)):
            raise StructureMismatchError("order relation is not reflexive.")
        self._memo: dict[int, dict[int, int]] = {}

    @property
    def nodes(self) -> list[Hashable]:
        return self._nodes

    def __contains__(self, node: object) -> bool:
        return node in self._index

    def _column(self, top: int) -> dict[int, int]:
        if top in self._memo:
            return self._memo[top]
        below = [i for i in np.nonzero(self._leq[:, top])[0]]
        # Process from the top down: an element comes after everything strictly above it.
        below.sort(key=lambda i: -int(self._leq[:, i].sum()))
        values: dict[int, int] = {}
        for i in below:
            if i == top:
                values[i] = 1
                continue
            values[i] = -sum(values[j] for j in values if self._leq[i, j] and j != i)
        self._memo[top] = values
        return values

    def __call__(self, lower: Hashable, upper: Hashable) -> int:
        """``mu(lower, upper)``; zero when ``lower`` is not below ``upper``."""
        try:
            i, j = self._index[lower], self._index[upper]
        except KeyError as e:
            raise StructureMismatchError(f"{e.args[0]!r} is not an element of the poset.")
        return self._column(j).get(i, 0)


def subgroup_moebius(subgroups: Sequence[Subgroup]) -> MoebiusFunction:
    """Möbius function of a set of subgroups ordered by inclusion."""
    masks = np.stack([s.mask for s in subgroups]) if subgroups else np.zeros((0, 0), dtype=bool)
    # leq[i, j] iff subgroup i is contained in subgroup j.
    leq = ~np.any(masks[:, None, :] & ~masks[None, :, :], axis=2) if len(subgroups) else np.zeros((0, 0), dtype=bool)
    return MoebiusFunction(subgroups, leq)
