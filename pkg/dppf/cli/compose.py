# coding=utf-8
# Copyright (c) dppf contributors
"""CLI command for the composition of a diagonal idempotent with an idempotent of the second factor."""
from __future__ import annotations

import argparse
from typing import Any

from dppf.cli import add_run_arguments, build_config, emit
from dppf.cli.analysis import load_groups, select
from dppf.functor import compose_idempotents, support_holds, support_obstruction
from dppf.pairs import enumerate_diagonal_pairs, enumerate_pairs


def compose(args: argparse.Namespace) -> None:
    """
    Print ``F^{HxG}_{Q,t} ⊗_{kG} F^G_{P,s}`` as a species vector over ``H``.

    The first ``--group`` is ``H`` and the second is ``G``; with a single group both factors are that group.
    """
    config = build_config(args, "compose")
    groups = load_groups(config)
    if len(groups) > 2:
        raise argparse.ArgumentTypeError("compose takes at most two groups.")
    first, second = groups[0], groups[-1]
    p = config.prime

    diagonal = enumerate_diagonal_pairs(first, second, p)
    spanning = [pair for pair in enumerate_pairs(second, p) if pair.span.order == second.order]
    target = enumerate_pairs(first, p)

    records: list[dict[str, Any]] = []
    lines: list[str] = []
    for dindex, dq in select(diagonal, config.dpair, "diagonal pair"):
        for index, pair in select(spanning, config.pair, "spanning pair"):
            header = f"[{dindex}] {dq.render()} * [{index}] F{pair.render()}"
            record: dict[str, Any] = {
                "kind": "composition",
                "first": first.name,
                "second": second.name,
                "p": p,
                "dpair": dindex,
                "pair": index,
            }
            reason = support_obstruction(dq, pair)
            if reason is not None:
                records.append({**record, "zero_by_support": True, "reason": reason, "species": None})
                lines.append(f"{header}\n  product = 0 (support): {reason}")
                continue
            product = compose_idempotents(dq, pair)
            species = list(product.species)
            records.append(
                {
                    **record,
                    "zero_by_support": False,
                    "reason": None,
                    "species": species,
                    "support_holds": support_holds(dq, pair, product),
                }
            )
            lines.append(header)
            support = [(target[i].render(), v.render()) for i, v in enumerate(species) if not v.is_zero()]
            if not support:
                lines.append("  product = 0")
            lines.extend(f"  at {rendered}: {value}" for rendered, value in support)
    emit(config, records, lines)


def register_parser(parser: argparse._SubParsersAction) -> None:  # type: ignore
    """Register the compose command to a root parser."""
    compose_parser = parser.add_parser(
        "compose", help="Compose a diagonal idempotent of H x G with an idempotent F_{P,s} of G."
    )
    add_run_arguments(compose_parser, selectors=True)
    compose_parser.set_defaults(subcommand=compose)
