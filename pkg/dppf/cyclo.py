# coding=utf-8
# Copyright (c) dppf contributors
"""
Exact arithmetic in the cyclotomic fields Q(zeta_m).

A :class:`CycloNum` stores rational coordinates in the power basis ``1, z, ..., z^(phi(m)-1)`` with ``z = zeta_m``,
reduced modulo the ``m``-th cyclotomic polynomial. Values at different moduli are compared and combined after lifting
both to the least common multiple of the moduli.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

import sympy

from dppf.types import Rational

MAX_CYCLOTOMIC_MODULUS = 512

_X = sympy.Symbol("x")


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> sympy.Poly:
    """
    The ``m``-th cyclotomic polynomial over the integers.

    Computed by dividing ``x^m - 1`` exactly by ``Phi_d`` for every proper divisor ``d`` of ``m``.
    """
    if not 1 <= m <= MAX_CYCLOTOMIC_MODULUS:
        raise ValueError(f"Cyclotomic polynomials are supported for 1 <= m <= {MAX_CYCLOTOMIC_MODULUS}, got {m}.")
    poly = sympy.Poly(_X**m - 1, _X, domain=sympy.ZZ)
    for d in sympy.divisors(m)[:-1]:
        poly, remainder = sympy.div(poly, cyclotomic_polynomial(d))
        if not remainder.is_zero:
            raise ArithmeticError(f"x^{m} - 1 is not divisible by Phi_{d}.")
    return poly


@functools.lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    return int(sympy.totient(m))


@functools.lru_cache(maxsize=None)
def _power_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """Integer coordinates of ``z^e`` for ``e = 0..m-1`` in the reduced power basis."""
    degree = euler_phi(m)
    phi = [int(c) for c in reversed(cyclotomic_polynomial(m).all_coeffs())]
    current = [1] + [0] * (degree - 1)
    rows = []
    for _ in range(m):
        rows.append(tuple(current))
        top = current[-1]
        shifted = [0] + current[:-1]
        current = [shifted[i] - top * phi[i] for i in range(degree)]
    return tuple(rows)


Scalar = Union[int, Fraction, "CycloNum"]


class CycloNum:
    """
    An element of Q(zeta_m) in canonical reduced coordinates.

    Parameters
    ----------
    modulus : int
        The ``m`` of ``zeta_m``.
    coeffs : iterable of rationals
        Exactly ``phi(m)`` coordinates.
    """

    __slots__ = ("_modulus", "_coeffs")
    __hash__ = None  # type: ignore

    def __init__(self, modulus: int, coeffs: Iterable[Rational]):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}.")
        if len(coeffs) != euler_phi(modulus):
            raise ValueError(f"Q(zeta_{modulus}) needs {euler_phi(modulus)} coordinates, got {len(coeffs)}.")
        self._modulus = modulus
        self._coeffs = coeffs

    @classmethod
    def rational(cls, value: Rational, modulus: int = 1) -> CycloNum:
        return cls(modulus, (Fraction(value),) + (Fraction(0),) * (euler_phi(modulus) - 1))

    @classmethod
    def zero(cls, modulus: int = 1) -> CycloNum:
        return cls.rational(0, modulus)

    @classmethod
    def one(cls, modulus: int = 1) -> CycloNum:
        return cls.rational(1, modulus)

    @classmethod
    def root(cls, modulus: int, exponent: int = 1) -> CycloNum:
        """``zeta_m ** exponent``."""
        return cls(modulus, _power_rows(modulus)[exponent % modulus])

    @classmethod
    def from_exponents(cls, modulus: int, weights: Mapping[int, Rational]) -> CycloNum:
        """``sum(w * zeta_m ** e for e, w in weights.items())``."""
        rows = _power_rows(modulus)
        total = [Fraction(0)] * euler_phi(modulus)
        for exponent, weight in weights.items():
            if not weight:
                continue
            for i, c in enumerate(rows[exponent % modulus]):
                if c:
                    total[i] += weight * c
        return cls(modulus, total)

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def lift(self, modulus: int) -> CycloNum:
        """Rewrite in Q(zeta_modulus) for a multiple ``modulus`` of the current modulus."""
        if modulus % self._modulus:
            raise ValueError(f"cannot lift from modulus {self._modulus} to {modulus}.")
        if modulus == self._modulus:
            return self
        step = modulus // self._modulus
        return CycloNum.from_exponents(modulus, {i * step: c for i, c in enumerate(self._coeffs)})

    @staticmethod
    def _coerce(value: object) -> CycloNum | None:
        if isinstance(value, CycloNum):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return CycloNum.rational(value)
        if isinstance(value, RootOfUnity):
            return value.to_cyclo()
        return None

    @staticmethod
    def _align(a: CycloNum, b: CycloNum) -> tuple[CycloNum, CycloNum]:
        modulus = math.lcm(a.modulus, b.modulus)
        return a.lift(modulus), b.lift(modulus)

    def __add__(self, other: object) -> CycloNum:
        other_ = self._coerce(other)
        if other_ is None:
            return NotImplemented
        a, b = self._align(self, other_)
        return CycloNum(a.modulus, (x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum(self._modulus, (-c for c in self._coeffs))

    def __sub__(self, other: object) -> CycloNum:
        other_ = self._coerce(other)
        if other_ is None:
            return NotImplemented
        return self + (-other_)

    def __rsub__(self, other: object) -> CycloNum:
        return (-self) + other

    def __mul__(self, other: object) -> CycloNum:
        other_ = self._coerce(other)
        if other_ is None:
            return NotImplemented
        if other_.is_rational():
            factor = other_.coeffs[0]
            return CycloNum(self._modulus, (c * factor for c in self._coeffs))
        if self.is_rational():
            return other_ * self
        a, b = self._align(self, other_)
        weights: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    weights[i + j] = weights.get(i + j, Fraction(0)) + x * y
        return CycloNum.from_exponents(a.modulus, weights)

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_m).")
        if self.is_rational():
            return CycloNum.rational(1 / self._coeffs[0], self._modulus)
        poly = sympy.Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(self._coeffs)], _X, domain=sympy.QQ
        )
        inverse = poly.invert(cyclotomic_polynomial(self._modulus).set_domain(sympy.QQ))
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inverse.all_coeffs())]
        coeffs += [Fraction(0)] * (euler_phi(self._modulus) - len(coeffs))
        return CycloNum(self._modulus, coeffs)

    def __truediv__(self, other: object) -> CycloNum:
        other_ = self._coerce(other)
        if other_ is None:
            return NotImplemented
        return self * other_.inverse()

    def __rtruediv__(self, other: object) -> CycloNum:
        other_ = self._coerce(other)
        if other_ is None:
            return NotImplemented
        return other_ * self.inverse()

    def __pow__(self, exponent: int) -> CycloNum:
        base: CycloNum = self if exponent >= 0 else self.inverse()
        result = CycloNum.one(self._modulus)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        other_ = self._coerce(other)
        if other_ is None:
            return NotImplemented
        a, b = self._align(self, other_)
        return a.coeffs == b.coeffs

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational.")
        return self._coeffs[0]

    def render(self) -> str:
        """Text rendering ``a0 + a1*z + ...``; the variable is ``z = zeta_m``."""
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            power = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not power:
                terms.append(str(c))
            elif c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{c}*{power}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __str__(self) -> str:
        text = self.render()
        return text if self.is_rational() else f"{text} (z = zeta_{self._modulus})"

    def __repr__(self) -> str:
        return f"CycloNum(m={self._modulus}, coeffs={[str(c) for c in self._coeffs]})"


@dataclass(frozen=True)
class RootOfUnity:
    """``zeta_modulus ** exponent``, stored with ``exponent / modulus`` in lowest terms."""

    modulus: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}.")
        exponent = self.exponent % self.modulus
        divisor = math.gcd(exponent, self.modulus)
        object.__setattr__(self, "modulus", self.modulus // divisor)
        object.__setattr__(self, "exponent", exponent // divisor)

    @property
    def order(self) -> int:
        return self.modulus

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        modulus = math.lcm(self.modulus, other.modulus)
        return RootOfUnity(
            modulus, self.exponent * (modulus // self.modulus) + other.exponent * (modulus // other.modulus)
        )

    def __pow__(self, k: int) -> RootOfUnity:
        return RootOfUnity(self.modulus, self.exponent * k)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(self.modulus, -self.exponent)

    def is_one(self) -> bool:
        return self.exponent == 0

    def exponent_at(self, modulus: int) -> int:
        """The exponent ``e`` with ``self == zeta_modulus ** e``; ``modulus`` must be a multiple of the order."""
        if modulus % self.modulus:
            raise ValueError(f"zeta_{self.modulus} is not a power of zeta_{modulus}.")
        return self.exponent * (modulus // self.modulus)

    def to_cyclo(self) -> CycloNum:
        return CycloNum.root(self.modulus, self.exponent)


def character_value(chi: RootOfUnity, exponent: int) -> RootOfUnity:
    """Value ``chi(g)^exponent`` of a character of a cyclic group, given ``chi`` at the generator."""
    return chi**exponent


def as_cyclo(value: Scalar | RootOfUnity) -> CycloNum:
    coerced = CycloNum._coerce(value)
    if coerced is None:
        raise TypeError(f"cannot interpret {value!r} as a cyclotomic number.")
    return coerced
