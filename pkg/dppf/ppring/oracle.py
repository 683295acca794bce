# coding=utf-8
# Copyright (c) dppf contributors
"""
An independent characteristic-2 computation of species for permutation modules.

The Brauer quotient ``M[P]`` of ``M = k[G/L]`` over GF(2) is built as the span of the P-orbit sums modulo the
relative traces from proper subgroups of ``P``. The Brauer character of ``s`` is recovered from the dimensions of the
fixed spaces of the powers of ``s``; ``s`` has odd order, so its action is semisimple, and the module is defined over
the prime field with a rational character, so eigenvalues of the same order occur with the same multiplicity.
"""
from __future__ import annotations

import logging
from fractions import Fraction

import numpy as np
import numpy.typing as npt
import sympy
from sympy.functions.combinatorial.numbers import mobius

from dppf._exceptions import GroupTooLargeError, StructureMismatchError
from dppf.cyclo import CycloNum, euler_phi
from dppf.pairs import Pair
from dppf.ppring.symbols import MonomialSymbol, left_coset_representatives

logger = logging.getLogger(__name__)

MAX_ORACLE_ORDER = 8


def gf2_rank(matrix: npt.NDArray[np.uint8]) -> int:
    """Rank over GF(2) by row reduction."""
    work = (np.array(matrix, dtype=np.uint8) & 1).copy()
    if work.size == 0:
        return 0
    rows, cols = work.shape
    rank = 0
    for col in range(cols):
        pivots = np.nonzero(work[rank:, col])[0]
        if not len(pivots):
            continue
        pivot = rank + int(pivots[0])
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        below = np.nonzero(work[:, col])[0]
        below = below[below != rank]
        work[below] ^= work[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def _coset_action(symbol: MonomialSymbol) -> npt.NDArray[np.int64]:
    """``action[g, i]`` is the index of the coset ``g x_i L``."""
    group = symbol.ambient
    reps = left_coset_representatives(symbol.L)
    coset_of = np.full(group.order, -1, dtype=np.int64)
    for index, x in enumerate(reps):
        coset_of[group.table[x, symbol.L.array]] = index
    reps_arr = np.array(reps, dtype=np.int64)
    return coset_of[group.table[:, reps_arr]]


def _orbit_sums(action: npt.NDArray[np.int64], elements: tuple[int, ...], size: int) -> list[npt.NDArray[np.uint8]]:
    seen = np.zeros(size, dtype=bool)
    sums = []
    for i in range(size):
        if seen[i]:
            continue
        orbit = np.unique(action[list(elements), i])
        seen[orbit] = True
        vector = np.zeros(size, dtype=np.uint8)
        vector[orbit] = 1
        sums.append(vector)
    return sums


def _relative_traces(pair: Pair, action: npt.NDArray[np.int64], size: int) -> npt.NDArray[np.uint8]:
    """Rows spanning the sum of ``Tr_Q^P(M^Q)`` over the proper subgroups ``Q`` of ``P``."""
    group = pair.ambient
    P = pair.P
    rows: list[npt.NDArray[np.uint8]] = []
    for Q in group.subgroups:
        if Q.order >= P.order or not Q.issubset(P):
            continue
        # left transversal of Q in P
        transversal: list[int] = []
        covered: set[int] = set()
        for g in P:
            if g in covered:
                continue
            covered.update(group.table[g, Q.array].tolist())
            transversal.append(g)
        for orbit_sum in _orbit_sums(action, Q.elements, size):
            support = np.nonzero(orbit_sum)[0]
            trace = np.zeros(size, dtype=np.uint8)
            for g in transversal:
                moved = np.zeros(size, dtype=np.uint8)
                moved[action[g, support]] = 1
                trace ^= moved
            rows.append(trace)
    if not rows:
        return np.zeros((0, size), dtype=np.uint8)
    return np.array(rows, dtype=np.uint8)


def brauer_quotient_species_char2(symbol: MonomialSymbol, pair: Pair) -> CycloNum:
    """
    ``tau_{P,s}(Ind_L^G k)`` computed from the Brauer quotient over GF(2).

    Raises
    ------
    StructureMismatchError
        If the character is not trivial, the prime is not 2, or the ambient groups differ.
    GroupTooLargeError
        If the group has more than ``MAX_ORACLE_ORDER`` elements.
    """
    if pair.p != 2:
        raise StructureMismatchError(f"the characteristic-2 oracle needs p = 2, got {pair.p}.")
    if not symbol.is_trivial_character():
        raise StructureMismatchError("the characteristic-2 oracle handles permutation modules only.")
    if symbol.ambient is not pair.ambient:
        raise StructureMismatchError("symbol and pair live in different groups.")
    group = symbol.ambient
    if group.order > MAX_ORACLE_ORDER:
        raise GroupTooLargeError(group.order, MAX_ORACLE_ORDER, group.name or None)

    action = _coset_action(symbol)
    size = action.shape[1]
    fixed_basis = np.array(_orbit_sums(action, pair.P.elements, size), dtype=np.uint8)
    traces = _relative_traces(pair, action, size)
    trace_rank = gf2_rank(traces)

    def fixed_dimension(k: int) -> int:
        # dimension of the fixed space of s^k on M^P / T
        power = group.power(pair.s, k)
        moved = np.zeros_like(fixed_basis)
        for row, vector in enumerate(fixed_basis):
            moved[row, action[power, np.nonzero(vector)[0]]] = 1
        difference = moved ^ fixed_basis
        image_rank = gf2_rank(np.vstack([difference, traces])) - trace_rank
        return len(fixed_basis) - image_rank - trace_rank

    n = pair.s_order
    divisors = sympy.divisors(n)
    fixed = {k: fixed_dimension(k) for k in divisors}
    value = Fraction(0)
    for d in divisors:
        # number of eigenvalues of exact order d
        exact = sum(int(mobius(d // k)) * fixed[k] for k in sympy.divisors(d))
        value += Fraction(exact * int(mobius(d)), euler_phi(d))
    logger.debug("Oracle species of %s at %s is %s.", symbol.render(), pair.render(), value)
    return CycloNum.rational(value)
