# Copyright (c) dppf contributors
"""Test exact arithmetic in cyclotomic fields."""
import functools
import operator
from fractions import Fraction

import numpy as np
import pytest
import sympy

from dppf.cyclo import CycloNum, RootOfUnity, as_cyclo, character_value, cyclotomic_polynomial, euler_phi

x = sympy.Symbol("x")


class TestCyclotomicPolynomial:
    @pytest.mark.parametrize("m, expected", [(1, x - 1), (2, x + 1), (6, x**2 - x + 1), (8, x**4 + 1)])
    def test_polynomials(self, m, expected):
        assert cyclotomic_polynomial(m) == sympy.Poly(expected, x, domain=sympy.ZZ)

    def test_bound(self):
        with pytest.raises(ValueError, match="supported"):
            cyclotomic_polynomial(0)

    @pytest.mark.parametrize("m", [1, 5, 12, 30])
    def test_degree(self, m):
        assert cyclotomic_polynomial(m).degree() == euler_phi(m)


class TestCycloNum:
    def test_third_roots(self):
        z = CycloNum.root(3)
        assert z + z**2 == -1

    def test_fourth_root_squared(self):
        z = CycloNum.root(4)
        assert z * z == -1

    def test_rational_scaling(self):
        z = CycloNum.root(6)
        assert Fraction(1, 2) * z + Fraction(1, 2) * z == z

    def test_lift(self):
        assert CycloNum.root(6, 2) == CycloNum.root(3)
        assert CycloNum.root(3).lift(6) == CycloNum.root(6, 2)
        with pytest.raises(ValueError, match="cannot lift"):
            CycloNum.root(4).lift(6)

    def test_mixed_moduli(self):
        # zeta_4 * zeta_3 = zeta_12^7
        assert CycloNum.root(4) * CycloNum.root(3) == CycloNum.root(12, 7)

    def test_is_zero(self):
        assert (1 + CycloNum.root(2)).is_zero()
        assert not CycloNum.root(5).is_zero()

    @pytest.mark.parametrize("m", [3, 5, 7, 8, 12])
    def test_inverse(self, m):
        value = 2 + CycloNum.root(m) - 3 * CycloNum.root(m, 2)
        assert value * value.inverse() == 1
        assert value / value == 1

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            CycloNum.zero(5).inverse()

    def test_root_sums(self):
        for m in range(2, 13):
            assert CycloNum.from_exponents(m, {e: 1 for e in range(m)}).is_zero()

    def test_coordinates(self):
        with pytest.raises(ValueError, match="coordinates"):
            CycloNum(5, [1, 2])

    def test_to_fraction(self):
        assert CycloNum.rational(Fraction(3, 4), 7).to_fraction() == Fraction(3, 4)
        with pytest.raises(ValueError, match="not rational"):
            CycloNum.root(3).to_fraction()

    def test_render(self):
        assert CycloNum.zero().render() == "0"
        assert CycloNum.rational(Fraction(-1, 2)).render() == "-1/2"
        assert CycloNum.root(5, 1).render() == "z"

    def test_negative_power(self):
        z = CycloNum.root(7)
        assert z**-1 == CycloNum.root(7, 6)


class TestRootOfUnity:
    def test_normalised(self):
        assert RootOfUnity(6, 2) == RootOfUnity(3, 1)
        assert RootOfUnity(4, 4).is_one()

    def test_character_value(self):
        assert character_value(RootOfUnity(3, 1), 2) == RootOfUnity(3, 2)

    def test_exponent_at(self):
        assert RootOfUnity(3, 1).exponent_at(12) == 4
        with pytest.raises(ValueError):
            RootOfUnity(3, 1).exponent_at(4)

    def test_as_cyclo(self):
        assert as_cyclo(RootOfUnity(4, 1)) == CycloNum.root(4)
        assert as_cyclo(3) == CycloNum.rational(3)
        with pytest.raises(TypeError):
            as_cyclo("3")


def _random_value(rng: np.random.Generator, m: int) -> CycloNum:
    numerators = rng.integers(-4, 5, size=euler_phi(m))
    denominators = rng.integers(1, 4, size=euler_phi(m))
    return CycloNum(m, [Fraction(int(n), int(d)) for n, d in zip(numerators, denominators)])


@pytest.mark.parametrize("m", range(1, 25))
class TestFieldAxioms:
    @pytest.fixture
    def triples(self, m):
        rng = np.random.default_rng(m)
        return [tuple(_random_value(rng, m) for _ in range(3)) for _ in range(3)]

    def test_ring_axioms(self, m, triples):
        for a, b, c in triples:
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert (a - a).is_zero()
            assert a * CycloNum.one(m) == a

    def test_inverses(self, m, triples):
        for a, b, _ in triples:
            if not a.is_zero():
                assert a * a.inverse() == 1
                assert (b / a) * a == b

    @pytest.mark.parametrize("factor", [2, 3])
    def test_lift_commutes_with_operations(self, m, triples, factor):
        target = m * factor
        for a, b, _ in triples:
            x, y = a.lift(target), b.lift(target)
            assert (a + b).lift(target).coeffs == (x + y).coeffs
            assert (a - b).lift(target).coeffs == (x - y).coeffs
            assert (a * b).lift(target).coeffs == (x * y).coeffs
            if not b.is_zero():
                assert (a / b).lift(target).coeffs == (x / y).coeffs

    def test_divisor_product(self, m):
        product = functools.reduce(operator.mul, (cyclotomic_polynomial(d) for d in sympy.divisors(m)))
        assert product == sympy.Poly(x**m - 1, x, domain=sympy.ZZ)
