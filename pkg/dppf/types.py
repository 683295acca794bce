# coding=utf-8
# Copyright (c) dppf contributors
from __future__ import annotations

import os
import pathlib
from fractions import Fraction
from typing import Sequence, Union

import numpy as np
import numpy.typing as npt

PathLike = Union[str, os.PathLike, pathlib.Path]
Rational = Union[int, Fraction]
Permutation = tuple[int, ...]
ElementArray = npt.NDArray[np.int64]
ElementSequence = Union[Sequence[int], ElementArray]
