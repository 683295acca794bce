# coding=utf-8
# Copyright (c) dppf contributors
"""Reading groups from ingestion files and resolving ``catalog:NAME`` sources."""
from __future__ import annotations

import json
import logging
import pathlib

from dppf._exceptions import GroupError, GroupFormatError
from dppf.groups._group import Group
from dppf.groups.catalog import catalog_group
from dppf.groups.permutations import from_permutation_generators
from dppf.types import PathLike

logger = logging.getLogger(__name__)

CATALOG_PREFIX = "catalog:"


def load_group_file(path: PathLike) -> Group:
    """
    Read a group from a JSON file holding either ``{"table": [[...], ...]}`` or
    ``{"degree": n, "perm_gens": ["(1 2 3)", "(1 2)"]}``.

    Raises
    ------
    GroupFormatError
        On malformed JSON (with line and column) or malformed content.
    GroupError
        If a given table fails a group axiom; the failed check is named.
    """
    path = pathlib.Path(path)
    try:
        content = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise GroupFormatError(f"invalid JSON in {path}: {e.msg}", position=f"line {e.lineno}, column {e.colno}")

    if not isinstance(content, dict):
        raise GroupFormatError(f"{path} must contain a JSON object")
    name = str(content.get("name", path.stem))

    if "table" in content:
        table = content["table"]
        if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
            raise GroupFormatError("'table' must be a list of rows", str(type(table).__name__))
        for i, row in enumerate(table):
            for j, value in enumerate(row):
                if not isinstance(value, int) or isinstance(value, bool):
                    raise GroupFormatError("table entries must be integers", repr(value), f"row {i}, column {j}")
        logger.debug("Loading a multiplication table of order %d from %s.", len(table), path)
        return Group(table, name=name)

    if "degree" in content and "perm_gens" in content:
        degree = content["degree"]
        generators = content["perm_gens"]
        if not isinstance(degree, int) or degree < 1:
            raise GroupFormatError("'degree' must be a positive integer", repr(degree))
        if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
            raise GroupFormatError("'perm_gens' must be a list of cycle strings", repr(generators))
        return from_permutation_generators(degree, generators, name=name)

    raise GroupFormatError(f"{path} needs either a 'table' or 'degree' and 'perm_gens' entries")


def resolve_group(source: str) -> Group:
    """Resolve ``catalog:NAME`` or a path to an ingestion file."""
    if source.startswith(CATALOG_PREFIX):
        name = source[len(CATALOG_PREFIX) :]
        try:
            return catalog_group(name)
        except KeyError as e:
            raise GroupError(str(e.args[0]))
    return load_group_file(source)
