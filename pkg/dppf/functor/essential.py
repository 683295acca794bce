# coding=utf-8
# Copyright (c) dppf contributors
"""Non-vanishing and dimension of the essential algebra of a group in the diagonal category."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Optional

from dppf._exceptions import GroupTooLargeError
from dppf.cyclo import euler_phi
from dppf.groups import Group, outer_automorphism_order
from dppf.groups.homomorphisms import MAX_ISOMORPHISM_ORDER
from dppf.pairs import Pair, enumerate_pairs, is_ddelta

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EssentialReport:
    """
    Whether the essential algebra of ``group`` is non-zero, with a witnessing pair ``(P, s)`` generating the group and
    ``C_<s>(P) = 1``.

    ``dimension`` is ``phi(n) |Out(G)|`` with ``n`` the order of ``s``; it is 0 when there is no witness.
    """

    group: Group
    p: int
    nonzero: bool
    witness: Optional[Pair] = None
    n: Optional[int] = None
    dimension: int = 0

    def summary(self) -> dict[str, Any]:
        return {
            "group": self.group.name,
            "order": self.group.order,
            "p": self.p,
            "nonzero": self.nonzero,
            "witness": None if self.witness is None else self.witness.summary(),
            "n": self.n,
            "dimension": self.dimension,
        }


def essential_report(group: Group, p: int) -> EssentialReport:
    """
    Search the pair classes for a witness ``(P, s)`` with ``G = <Ps>`` and ``C_<s>(P) = 1``.

    Raises
    ------
    GroupTooLargeError
        Beyond the bound of the automorphism search.
    """
    if group.order > MAX_ISOMORPHISM_ORDER:
        raise GroupTooLargeError(group.order, MAX_ISOMORPHISM_ORDER, group.name or None)
    for pair in enumerate_pairs(group, p):
        if pair.span.order == group.order and is_ddelta(pair):
            n = pair.s_order
            dimension = euler_phi(n) * outer_automorphism_order(group)
            logger.info("Essential algebra of %s at p=%d is non-zero with witness %s.", group.name, p, pair.render())
            return EssentialReport(group, p, True, pair, n, dimension)
    return EssentialReport(group, p, False)
