# coding=utf-8
# Copyright (c) dppf contributors
"""CLI commands that inspect single groups: pairs, idempotents, simple functors and essential algebras."""
from __future__ import annotations

import argparse
from typing import Any, Sequence, TypeVar

from dppf._exceptions import SelectorError
from dppf.cli import add_run_arguments, build_config, emit
from dppf.config import RunConfig
from dppf.functor import SimpleLabel, essential_report, functor_decomposition, s11_dim, simple_dim
from dppf.groups import Group, catalog_names, resolve_group
from dppf.pairs import Pair, enumerate_pairs, is_ddelta, reduce_pair
from dppf.ppring import TElement, idempotent_v1, idempotent_v2

T = TypeVar("T")


def load_groups(config: RunConfig) -> list[Group]:
    """The groups of ``--group``, or the catalog up to ``--max-order``."""
    sources = config.groups or [f"catalog:{name}" for name in catalog_names(config.max_order)]
    return [resolve_group(source) for source in sources]


def select(items: Sequence[T], index: int | None, kind: str) -> list[tuple[int, T]]:
    """All items, or the one at ``index``."""
    if index is None:
        return list(enumerate(items))
    if not 0 <= index < len(items):
        raise SelectorError(kind, index, len(items))
    return [(index, items[index])]


def label_summary(label: SimpleLabel) -> dict[str, int]:
    rep = label.representative
    return {"order_P": rep.P.order, "order_s": rep.s_order, "order_span": rep.span.order}


def element_terms(x: TElement) -> list[dict[str, Any]]:
    return [
        {
            "L": list(symbol.L.elements),
            "modulus": symbol.modulus,
            "exponents": list(symbol.exponents),
            "coefficient": c,
        }
        for symbol, c in x.terms.items()
    ]


def _pair_line(index: int, pair: Pair) -> str:
    reduced = reduce_pair(pair)
    flag = "D^Δ" if is_ddelta(pair) else "   "
    return (
        f"  [{index}] {pair.render()}  |P|={pair.P.order} |s|={pair.s_order} |<Ps>|={pair.span.order} {flag}"
        f"  reduction |P|={reduced.P.order} |s|={reduced.s_order} |<Ps>|={reduced.span.order}"
    )


def analyze(args: argparse.Namespace) -> None:
    """Print the conjugacy classes, the pair classes and their reductions."""
    config = build_config(args, "analyze")
    records: list[dict[str, Any]] = []
    lines: list[str] = []
    for group in load_groups(config):
        classes = enumerate_pairs(group, config.prime)
        records.append(
            {
                "kind": "group",
                "group": group.name,
                "order": group.order,
                "p": config.prime,
                "conjugacy_classes": [list(c) for c in group.classes],
                "pair_classes": len(classes),
            }
        )
        lines.append(f"{group.name}: order {group.order}, {len(group.classes)} conjugacy classes")
        rendered = " ".join("{" + ",".join(map(str, c)) + "}" for c in group.classes)
        lines.append(f"  classes: {rendered}")
        lines.append(f"  {len(classes)} pair classes at p={config.prime}")
        for index, pair in enumerate(classes):
            reduced = reduce_pair(pair)
            records.append(
                {
                    "kind": "pair",
                    "group": group.name,
                    "p": config.prime,
                    "index": index,
                    **pair.summary(),
                    "reduction": {
                        "order_P": reduced.P.order,
                        "order_s": reduced.s_order,
                        "order_span": reduced.span.order,
                    },
                }
            )
            lines.append(_pair_line(index, pair))
    emit(config, records, lines)


def idempotents(args: argparse.Namespace) -> None:
    """Print the expanded idempotents under both formulas with their species."""
    config = build_config(args, "idempotents")
    records: list[dict[str, Any]] = []
    lines: list[str] = []
    for group in load_groups(config):
        classes = enumerate_pairs(group, config.prime)
        for index, pair in select(classes.pairs, config.pair, "pair"):
            first, second = idempotent_v1(pair), idempotent_v2(pair)
            agree = first.species == second.species
            records.append(
                {
                    "kind": "idempotent",
                    "group": group.name,
                    "p": config.prime,
                    "index": index,
                    "pair": pair.summary(),
                    "terms": element_terms(first),
                    "species": list(first.species),
                    "formulas_agree": agree,
                }
            )
            lines.append(f"{group.name} [{index}] F{pair.render()}")
            lines.append(f"  sum over L <= <Ps>:  {first.render()}")
            lines.append(f"  sum over stable L:   {second.render()}")
            lines.append(f"  species: {' '.join(v.render() for v in first.species)}")
            lines.append(f"  formulas agree: {'yes' if agree else 'NO'}")
    emit(config, records, lines)


def decompose(args: argparse.Namespace) -> None:
    """Print the blocks of pair classes cut out by the simple functors."""
    config = build_config(args, "decompose")
    records: list[dict[str, Any]] = []
    lines: list[str] = []
    for group in load_groups(config):
        blocks = functor_decomposition(group, config.prime)
        lines.append(f"{group.name} at p={config.prime}: {len(blocks)} simple functors")
        for label, block in blocks.items():
            records.append(
                {
                    "kind": "block",
                    "group": group.name,
                    "p": config.prime,
                    "label": label_summary(label),
                    "classes": list(block),
                    "dimension": len(block),
                }
            )
            lines.append(f"  S{label.render()}: dim {len(block)}, classes {list(block)}")
    emit(config, records, lines)


def simple_dims(args: argparse.Namespace) -> None:
    """Dimension table of every label seen on the given groups, with the S_{1,1} cross-check."""
    config = build_config(args, "simple-dims")
    groups = load_groups(config)
    labels: list[SimpleLabel] = []
    for group in groups:
        labels.extend(label for label in functor_decomposition(group, config.prime) if label not in labels)

    records: list[dict[str, Any]] = []
    lines = [f"{'label':<32}" + "".join(f"{g.name:>8}" for g in groups)]
    for label in labels:
        dims = [simple_dim(label, g) for g in groups]
        records.extend(
            {"kind": "simple_dim", "group": g.name, "p": config.prime, "label": label_summary(label), "dimension": d}
            for g, d in zip(groups, dims)
        )
        lines.append(f"{label.render():<32}" + "".join(f"{d:>8}" for d in dims))
    for group in groups:
        dimension = simple_dim(SimpleLabel.trivial(config.prime), group)
        expected = s11_dim(group, config.prime)
        records.append(
            {
                "kind": "s11",
                "group": group.name,
                "p": config.prime,
                "dimension": dimension,
                "pprime_classes": expected,
                "agrees": dimension == expected,
            }
        )
        lines.append(f"S_(1,1) on {group.name}: dim {dimension}, {expected} {config.prime}'-classes")
    emit(config, records, lines)


def essential(args: argparse.Namespace) -> None:
    """Report whether the essential algebra is non-zero, with a witness and its dimension."""
    config = build_config(args, "essential")
    records: list[dict[str, Any]] = []
    lines: list[str] = []
    for group in load_groups(config):
        report = essential_report(group, config.prime)
        records.append({"kind": "essential", **report.summary()})
        if report.witness is None:
            lines.append(f"{group.name} at p={config.prime}: essential algebra is zero")
            continue
        lines.append(
            f"{group.name} at p={config.prime}: non-zero, witness {report.witness.render()} with |s|={report.n}, "
            f"dimension {report.dimension}"
        )
    emit(config, records, lines)


def register_parser(parser: argparse._SubParsersAction) -> None:  # type: ignore
    """Register the analysis commands to a root parser."""
    analyze_parser = parser.add_parser("analyze", help="Conjugacy classes, pair classes and reductions.")
    add_run_arguments(analyze_parser)
    analyze_parser.set_defaults(subcommand=analyze)

    idempotents_parser = parser.add_parser("idempotents", help="Expanded primitive idempotents F_{P,s}.")
    add_run_arguments(idempotents_parser, selectors=True)
    idempotents_parser.set_defaults(subcommand=idempotents)

    decompose_parser = parser.add_parser("decompose", help="Block decomposition by simple functors.")
    add_run_arguments(decompose_parser)
    decompose_parser.set_defaults(subcommand=decompose)

    dims_parser = parser.add_parser("simple-dims", help="Dimensions of the simple functors over a list of groups.")
    add_run_arguments(dims_parser)
    dims_parser.set_defaults(subcommand=simple_dims)

    essential_parser = parser.add_parser("essential", help="Essential algebra of a group.")
    add_run_arguments(essential_parser)
    essential_parser.set_defaults(subcommand=essential)
