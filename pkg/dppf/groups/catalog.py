# coding=utf-8
# Copyright (c) dppf contributors
"""Built-in groups used as the default universe of the verification harness."""
from __future__ import annotations

import functools
from typing import Callable

import numpy as np

from dppf._exceptions import GroupError, StructureMismatchError
from dppf.groups._group import Group, GroupMap
from dppf.groups.permutations import from_permutation_generators


def cyclic_group(n: int) -> Group:
    if n == 1:
        return from_permutation_generators(1, [], name="C1")
    return from_permutation_generators(n, [tuple((i + 1) % n for i in range(n))], name=f"C{n}")


def dihedral_group(order: int) -> Group:
    """Dihedral group of the given order ``2n`` acting on ``n`` points."""
    if order % 2 or order < 4:
        raise GroupError(f"dihedral groups have even order at least 4, got {order}.")
    n = order // 2
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((-i) % n for i in range(n))
    return from_permutation_generators(n, [rotation, reflection], name=f"D{order}")


def symmetric_group(n: int) -> Group:
    if not 1 <= n <= 4:
        raise GroupError(f"symmetric groups are built for n <= 4 only, got {n}.")
    if n == 1:
        return from_permutation_generators(1, [], name="S1")
    if n == 2:
        return from_permutation_generators(2, ["(1 2)"], name="S2")
    cycle = "(" + " ".join(str(i) for i in range(1, n + 1)) + ")"
    return from_permutation_generators(n, [cycle, "(1 2)"], name=f"S{n}")


def alternating_group_4() -> Group:
    return from_permutation_generators(4, ["(1 2 3)", "(2 3 4)"], name="A4")


def quaternion_group() -> Group:
    return from_permutation_generators(8, ["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], name="Q8")


def elementary_abelian_group(p: int, rank: int) -> Group:
    generators = []
    for r in range(rank):
        images = list(range(p * rank))
        for i in range(p):
            images[r * p + i] = r * p + (i + 1) % p
        generators.append(tuple(images))
    name = "x".join([f"C{p}"] * rank) if rank else "C1"
    return from_permutation_generators(max(1, p * rank), generators, name=name)


def semidirect_product(base: Group, n: int, automorphism: GroupMap, name: str | None = None) -> Group:
    """
    ``base ⋊ C_n`` where the generator of ``C_n`` acts on ``base`` through ``automorphism``.

    The element ``(x, k)`` is encoded as ``k * |base| + x`` and ``(x, k)(y, l) = (x a^k(y), k + l)``.
    """
    if automorphism.source is not base or automorphism.target is not base:
        raise StructureMismatchError("the action must be an automorphism of the base group.")
    powers = [np.arange(base.order)]
    for _ in range(n):
        powers.append(automorphism.array[powers[-1]])
    if not np.array_equal(powers[n], powers[0]):
        raise GroupError(f"the automorphism does not have order dividing {n}.")
    alpha = np.stack(powers[:n])

    size = base.order
    x = np.arange(n * size) % size
    k = np.arange(n * size) // size
    first = base.table[x[:, None], alpha[k[:, None], x[None, :]]]
    table = ((k[:, None] + k[None, :]) % n) * size + first
    return Group(table, name=name or f"{base.name}:C{n}")


def _cyclic_power_map(group: Group, exponent: int) -> GroupMap:
    # Cyclic groups from `cyclic_group` number the element g^i as i.
    return GroupMap(group, group, tuple((i * exponent) % group.order for i in group.elements), bijective=True)


def _c3_c4() -> Group:
    base = cyclic_group(3)
    return semidirect_product(base, 4, _cyclic_power_map(base, -1), name="C3:C4")


def _c7_c3() -> Group:
    base = cyclic_group(7)
    return semidirect_product(base, 3, _cyclic_power_map(base, 2), name="C7:C3")


CATALOG: dict[str, Callable[[], Group]] = {
    "C1": lambda: cyclic_group(1),
    **{f"C{n}": functools.partial(cyclic_group, n) for n in range(2, 9)},
    "C2xC2": lambda: elementary_abelian_group(2, 2),
    "S3": lambda: symmetric_group(3),
    "D8": lambda: dihedral_group(8),
    "Q8": quaternion_group,
    "A4": alternating_group_4,
    "S4": lambda: symmetric_group(4),
    "C3:C4": _c3_c4,
    "C7:C3": _c7_c3,
}


@functools.lru_cache(maxsize=None)
def catalog_group(name: str) -> Group:
    """
    Look up a catalog group. The same object is returned on every call.

    Raises
    ------
    KeyError
        For unknown names, listing the available ones.
    """
    if name not in CATALOG:
        raise KeyError(f"Unknown catalog group '{name}'. Available: {', '.join(CATALOG)}.")
    return CATALOG[name]()


def catalog_names(max_order: int | None = None) -> list[str]:
    """Catalog names in catalog order, optionally restricted to groups of order at most ``max_order``."""
    return [name for name in CATALOG if max_order is None or catalog_group(name).order <= max_order]
