# coding=utf-8
# Copyright (c) dppf contributors
from __future__ import annotations


class DppfError(Exception):
    pass


class GroupError(DppfError):
    def __init__(self, msg: str, identifier: str | None = None):
        msg = msg if identifier is None else f"group '{identifier}': " + msg
        super().__init__(msg)


class GroupTooLargeError(GroupError):
    def __init__(self, size: int, bound: int, identifier: str | None = None):
        self.size = size
        self.bound = bound
        super().__init__(f"too large: order {size} exceeds the bound {bound}.", identifier)


class GroupFormatError(GroupError):
    def __init__(self, msg: str, token: str | None = None, position: int | str | None = None):
        self.token = token
        self.position = position
        if token is not None:
            msg = f"{msg} (token '{token}'" + (f" at position {position})" if position is not None else ")")
        elif position is not None:
            msg = f"{msg} (at {position})"
        super().__init__(msg)


class PairError(DppfError):
    def __init__(self, msg: str):
        super().__init__(msg)


class StructureMismatchError(DppfError):
    def __init__(self, msg: str):
        super().__init__(msg)


class SelectorError(DppfError):
    def __init__(self, kind: str, index: int, valid: int):
        self.index = index
        self.valid = valid
        msg = f"invalid {kind} index {index}; valid indices are 0..{valid - 1}."
        if valid == 0:
            msg = f"invalid {kind} index {index}; there are no candidates."
        super().__init__(msg)
