# coding=utf-8
# Copyright (c) dppf contributors
"""Validated run configuration shared by the command line and the verification harness."""
from __future__ import annotations

from typing import Literal, Optional

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator

from dppf.groups.subgroups import MAX_SUBGROUP_ORDER

Command = Literal["analyze", "idempotents", "decompose", "simple-dims", "essential", "compose", "verify"]
Suite = Literal["idempotents", "biset", "functor", "essential", "cyclo", "all"]
SUITES: tuple[str, ...] = ("idempotents", "biset", "functor", "essential", "cyclo")


class RunConfig(BaseModel):
    """One invocation of a command."""

    model_config = ConfigDict(frozen=True)

    command: Command
    groups: list[str] = Field(default_factory=list)
    prime: int = 2
    output_format: Literal["pretty", "records"] = "pretty"
    max_order: int = Field(24, ge=1)
    suite: Suite = "all"
    pair: Optional[int] = Field(None, ge=0)
    dpair: Optional[int] = Field(None, ge=0)
    num_workers: int = 0

    @field_validator("prime")
    @classmethod
    def _prime(cls, value: int) -> int:
        if not sympy.isprime(value):
            raise ValueError(f"{value} is not a prime.")
        return value

    @field_validator("max_order")
    @classmethod
    def _max_order(cls, value: int) -> int:
        if value > MAX_SUBGROUP_ORDER:
            raise ValueError(f"max order {value} exceeds the bound {MAX_SUBGROUP_ORDER}.")
        return value

    @property
    def suites(self) -> tuple[str, ...]:
        return SUITES if self.suite == "all" else (self.suite,)
