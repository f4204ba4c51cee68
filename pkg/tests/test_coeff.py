"""Coefficient fields: exact rationals and prime fields."""

from fractions import Fraction

import pytest

from germkit import PrimeField, RationalField, field_for
from germkit.errors import DivisionByZero, InvalidCharacteristic


def test_field_for_dispatch():
    assert field_for(0).characteristic == 0
    assert field_for(32003).characteristic == 32003
    with pytest.raises(InvalidCharacteristic):
        field_for(4)
    with pytest.raises(InvalidCharacteristic):
        field_for(-3)


def test_rational_basics():
    F = RationalField()
    half = F.coerce(Fraction(1, 2))
    third = F.coerce(Fraction(1, 3))
    assert F.add(half, third) == Fraction(5, 6)
    assert F.mul(half, third) == Fraction(1, 6)
    assert F.sub(F.one, half) == half
    assert F.div(F.one, third) == 3
    assert F.neg(half) == Fraction(-1, 2)
    assert F.inv(Fraction(-2, 7)) == Fraction(-7, 2)
    with pytest.raises(DivisionByZero):
        F.inv(F.zero)


def test_prime_field_arithmetic():
    F = PrimeField(7)
    assert F.coerce(9) == 2
    assert F.coerce(-1) == 6
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.div(1, 2) == 4
    assert F.neg(0) == 0
    with pytest.raises(DivisionByZero):
        F.inv(0)


def test_prime_field_fermat_inverses():
    F = PrimeField(32003)
    for a in (1, 2, 3, 12345, 32002):
        assert F.mul(a, F.inv(a)) == 1


def test_coerce_fraction_into_prime_field():
    F = PrimeField(13)
    v = F.coerce(Fraction(1, 2))
    assert F.mul(v, 2) == 1
    with pytest.raises(DivisionByZero):
        F.coerce(Fraction(1, 13))
