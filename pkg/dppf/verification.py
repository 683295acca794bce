# coding=utf-8
# Copyright (c) dppf contributors
"""
The verification harness.

Every suite is split into tasks, one per group and prime (the cyclotomic suite is a single task). Tasks run on a
worker pool and their results are collected in submission order, so the failure log does not depend on scheduling.
"""
from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Any, Callable, Iterable

import sympy
from tqdm import tqdm

from dppf._exceptions import DppfError
from dppf.config import RunConfig
from dppf.cyclo import CycloNum, euler_phi
from dppf.functor import (
    SimpleLabel,
    compare_composition,
    compose_idempotents,
    essential_report,
    functor_decomposition,
    identity_bimodule_check,
    lattice_check,
    minimal_group_check,
    s11_dim,
    simple_dim,
    support_holds,
    support_obstruction,
    W_dimension,
)
from dppf.groups import Group, all_subgroups, catalog_group, catalog_names, outer_automorphism_order, quotient
from dppf.groups.homomorphisms import MAX_ISOMORPHISM_ORDER
from dppf.groups.io import resolve_group
from dppf.groups.subgroups import normal_subgroups
from dppf.pairs import (
    MAX_DIAGONAL_FACTOR_ORDER,
    PairGroup,
    enumerate_diagonal_pairs,
    enumerate_pairs,
    is_ddelta,
    normal_pprime_subgroups,
    pairs_isomorphic,
    reduce_pair,
)
from dppf.ppring import (
    SpeciesVector,
    TElement,
    brauer_quotient_species_char2,
    deflation_bimodule_is_diagonal,
    deflation_constant,
    deflation_rhs,
    idempotent_v1,
    idempotent_v2,
    induction_rhs,
    inflation_bimodule_is_diagonal,
    inflation_rhs,
    op_def,
    op_ind,
    op_inf,
    op_res,
    restriction_rhs,
    species_of_monomial,
    trivial_symbol,
)
from dppf.ppring.biset import project_pair
from dppf.ppring.oracle import MAX_ORACLE_ORDER

logger = logging.getLogger(__name__)

# Products and composition checks get expensive quickly; these bounds keep a full run at desk scale.
MAX_BIMODULE_ORDER = 24
MAX_COMPOSITION_ORDER = 6
MAX_LATTICE_LABELS = 10


@dataclass(frozen=True)
class Task:
    suite: str
    source: str
    p: int


@dataclass
class TaskResult:
    task: Task
    checks: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)

    def check(self, passed: bool, subject: str, expected: Any = None, computed: Any = None) -> None:
        self.checks += 1
        if passed:
            return
        record = {
            "suite": self.task.suite,
            "group": self.task.source,
            "p": self.task.p,
            "subject": subject,
            "expected": _plain(expected),
            "computed": _plain(computed),
        }
        logger.warning(
            "Verification failure in %s on %s at p=%d: %s.", self.task.suite, self.task.source, self.task.p, subject
        )
        self.failures.append(record)


def _plain(value: Any) -> Any:
    if isinstance(value, SpeciesVector):
        return list(value.values)
    return value


@dataclass
class VerificationReport:
    checks: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    tasks: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


def primes_for(group: Group) -> list[int]:
    return sorted({2, 3} | set(sympy.primefactors(group.order)))


def build_tasks(config: RunConfig) -> list[Task]:
    """Tasks in catalog order, or in the order of the given group sources."""
    sources = config.groups or [f"catalog:{name}" for name in catalog_names(config.max_order)]
    tasks = []
    for suite in config.suites:
        if suite == "cyclo":
            tasks.append(Task(suite, "cyclotomic", 0))
            continue
        for source in sources:
            try:
                primes = primes_for(resolve_group(source))
            except (DppfError, KeyError, OSError):
                # reported by the task itself
                primes = [2]
            tasks.extend(Task(suite, source, p) for p in primes)
    return tasks


def check_idempotents(group: Group, p: int, result: TaskResult) -> None:
    classes = enumerate_pairs(group, p)
    total = TElement.zero(group, p)
    for index, pair in enumerate(classes):
        first = idempotent_v1(pair)
        second = idempotent_v2(pair)
        delta = SpeciesVector.indicator(classes, [index])
        result.check(first.species == delta, f"delta {pair.render()}", delta, first.species)
        if first.species != second.species:
            logger.warning("Idempotent formulas disagree at %s in %s.", pair.render(), group.name)
        result.check(first.species == second.species, f"formulas agree {pair.render()}", first.species, second.species)
        total = total + first
    result.check(total.species == SpeciesVector.constant(classes, 1), "idempotents sum to [k]", None, total.species)

    if p == 2 and group.order <= MAX_ORACLE_ORDER:
        for L in group.subgroups:
            symbol = trivial_symbol(group, L)
            for pair in classes:
                direct = species_of_monomial(symbol, pair)
                oracle = brauer_quotient_species_char2(symbol, pair)
                result.check(direct == oracle, f"oracle Ind_{L.render()} k at {pair.render()}", oracle, direct)


def check_biset(group: Group, p: int, result: TaskResult) -> None:
    classes = enumerate_pairs(group, p)
    for H in all_subgroups(group, up_to_conjugacy=True):
        local, _ = H.to_group()
        for pair in classes:
            computed = op_res(H, idempotent_v1(pair)).species
            expected = restriction_rhs(H, pair)
            result.check(computed == expected, f"Res to {H.render()} of F{pair.render()}", expected, computed)
        for pair in enumerate_pairs(local, p):
            computed = op_ind(H, idempotent_v1(pair)).species
            expected = induction_rhs(H, pair)
            result.check(computed == expected, f"Ind from {H.render()} of F{pair.render()}", expected, computed)

    for N in normal_subgroups(group):
        if N.order == 1:
            continue
        presentation = quotient(group, N)
        for pair in enumerate_pairs(presentation.quotient, p):
            computed = op_inf(presentation, idempotent_v1(pair)).species
            expected = inflation_rhs(presentation, pair)
            result.check(computed == expected, f"Inf from /{N.render()} of F{pair.render()}", expected, computed)
        for pair in classes:
            deflated = op_def(presentation, idempotent_v1(pair)).species
            expected = deflation_rhs(presentation, pair)
            result.check(deflated == expected, f"Def to /{N.render()} of F{pair.render()}", expected, deflated)
            if pair.span.order == group.order and N.order % p:
                constant = deflation_constant(pair, N)
                inverse = Fraction(1, N.order)
                result.check(constant == inverse, f"m for {pair.render()} and {N.render()}", inverse, constant)
        if group.order <= MAX_BIMODULE_ORDER:
            pprime = N.order % p != 0
            deflation = deflation_bimodule_is_diagonal(presentation, p)
            inflation = inflation_bimodule_is_diagonal(presentation, p)
            result.check(deflation == pprime, f"Def bimodule vertex /{N.render()}", pprime, deflation)
            result.check(inflation == pprime, f"Inf bimodule vertex /{N.render()}", pprime, inflation)


def check_functor(group: Group, p: int, result: TaskResult, universe: Iterable[Group] = ()) -> None:
    classes = enumerate_pairs(group, p)
    blocks = functor_decomposition(group, p)
    covered = sum(len(b) for b in blocks.values())
    result.check(covered == len(classes), "blocks partition the pair classes", len(classes), covered)
    trivial = simple_dim(SimpleLabel.trivial(p), group)
    result.check(trivial == s11_dim(group, p), "dim S_{1,1} counts p'-classes", s11_dim(group, p), trivial)

    for pair in classes:
        reduced = reduce_pair(pair)
        result.check(is_ddelta(reduced), f"reduction of {pair.render()} is D^Δ")
        result.check(pairs_isomorphic(reduce_pair(reduced), reduced), f"reduction of {pair.render()} is idempotent")
        local = PairGroup.of(pair)
        for K in normal_pprime_subgroups(local.group, p):
            image = project_pair(quotient(local.group, K), local.local)
            result.check(
                SimpleLabel(image) == SimpleLabel(pair), f"reduction of {pair.render()} is stable modulo {K.render()}"
            )

    labels = list(blocks)
    smaller = [g for g in universe if g.order <= group.order]
    for label in labels:
        if label.span_order == group.order:
            result.check(minimal_group_check(label, [*smaller, group]), f"minimal group of {label.render()}")
            result.check(W_dimension(label) >= 1, f"W dimension of {label.render()}")
    if len(labels) <= MAX_LATTICE_LABELS:
        report = lattice_check([group], labels)
        failed = [list(f) for f in report.failures]
        result.check(report.holds, "label sets and evaluations determine each other", None, failed)

    if group.order <= MAX_COMPOSITION_ORDER:
        diagonal = enumerate_diagonal_pairs(group, group, p) if group.order <= MAX_DIAGONAL_FACTOR_ORDER else ()
        for pair in classes:
            if pair.span.order != group.order:
                continue
            for dq in diagonal:
                product = compose_idempotents(dq, pair)
                if support_obstruction(dq, pair) is not None:
                    result.check(product.is_zero(), f"{dq.render()} * F{pair.render()} vanishes")
                    continue
                result.check(support_holds(dq, pair, product), f"support of {dq.render()} * F{pair.render()}")
                check = compare_composition(dq, pair)
                subject = f"{dq.render()} * F{pair.render()} by tensor product"
                result.check(check.agrees, subject, check.expected, check.computed)
            check = identity_bimodule_check(group, pair)
            result.check(check.agrees, f"identity bimodule on F{pair.render()}", check.expected, check.computed)


def check_essential(group: Group, p: int, result: TaskResult) -> None:
    if group.order > MAX_ISOMORPHISM_ORDER:
        return
    report = essential_report(group, p)
    expected = any(label.span_order == group.order for label in functor_decomposition(group, p))
    result.check(report.nonzero == expected, "essential algebra is non-zero", expected, report.nonzero)
    if report.witness is not None:
        witness = report.witness
        result.check(witness.span.order == group.order and is_ddelta(witness), f"witness {witness.render()}")
        dimension = euler_phi(witness.s_order) * outer_automorphism_order(group)
        result.check(report.dimension == dimension, "essential dimension", dimension, report.dimension)


def check_cyclotomic(result: TaskResult, max_modulus: int = 24) -> None:
    for m in range(1, max_modulus + 1):
        zeta = CycloNum.root(m)
        result.check(zeta**m == CycloNum.one(), f"zeta_{m}^{m} = 1")
        result.check(len(zeta.coeffs) == euler_phi(m), f"degree of Q(zeta_{m})", euler_phi(m), len(zeta.coeffs))
        total = CycloNum.from_exponents(m, {e: 1 for e in range(m)})
        expected = CycloNum.one() if m == 1 else CycloNum.zero()
        result.check(total == expected, f"sum of the {m}-th roots", expected, total)
        result.check(CycloNum.root(2 * m, 2) == zeta, f"zeta_{2 * m}^2 = zeta_{m}")
        if m != 2:
            shifted = zeta + 1
            result.check(shifted * shifted.inverse() == CycloNum.one(), f"inverse of 1 + zeta_{m}")


_SUITES: dict[str, Callable[[Group, int, TaskResult], None]] = {
    "idempotents": check_idempotents,
    "biset": check_biset,
    "essential": check_essential,
}


def _run_task(task: Task, max_order: int = 24) -> TaskResult:
    result = TaskResult(task)
    if task.suite == "cyclo":
        check_cyclotomic(result)
        return result
    try:
        group = resolve_group(task.source)
    except (DppfError, KeyError, OSError) as e:
        result.check(False, f"loading {task.source}: {e}")
        return result
    try:
        if task.suite == "functor":
            universe = [catalog_group(name) for name in catalog_names(min(group.order, max_order))]
            check_functor(group, task.p, result, universe)
        else:
            _SUITES[task.suite](group, task.p, result)
    except DppfError as e:
        result.check(False, f"{task.suite} raised: {e}")
    return result


def run_verification(config: RunConfig, show_progress: bool = True) -> VerificationReport:
    """
    Run the suites selected in ``config``.

    With ``config.num_workers <= 0`` the tasks run in this process.
    """
    tasks = build_tasks(config)
    report = VerificationReport(tasks=len(tasks))
    logger.info("Running %d verification tasks.", len(tasks))

    def collect(task_result: TaskResult) -> None:
        report.checks += task_result.checks
        report.failures.extend(task_result.failures)

    if config.num_workers <= 0:
        for task in tqdm(tasks, disable=not show_progress):
            collect(_run_task(task, config.max_order))
    else:
        with Pool(config.num_workers) as pool:
            with tqdm(total=len(tasks), disable=not show_progress) as pbar:
                for task_result in pool.imap(functools.partial(_run_task, max_order=config.max_order), tasks):
                    pbar.update()
                    collect(task_result)
    logger.info("Verification ran %d checks with %d failures.", report.checks, len(report.failures))
    return report
