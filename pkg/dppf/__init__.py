# coding=utf-8
# Copyright (c) dppf contributors
"""Exact computations with diagonal p-permutation functors of finite groups."""
from ._exceptions import DppfError
from .cyclo import CycloNum
from .groups import Group, Subgroup
from .pairs import Pair

__author__ = """dppf contributors"""
__version__ = "0.1.0"

__all__ = ("Group", "Subgroup", "Pair", "CycloNum", "DppfError")
