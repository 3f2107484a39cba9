import math
from fractions import Fraction

import pytest

from diagcomp import (
    RATIONALS,
    DivisionByZero,
    FieldElement,
    FieldMismatch,
    InvalidArgument,
    PrimeField,
    parse_field,
)
from diagcomp.fields import is_prime


def test_gf5_add_wraps():
    F = PrimeField(5)
    assert F(2) + F(4) == F(1)


def test_rational_add():
    Q = RATIONALS
    assert Q(Fraction(1, 2)) + Q(Fraction(1, 3)) == Q(Fraction(5, 6))


def test_add_identity(field, rng):
    x = field.random_element(rng)
    assert x + field.zero() == x


def test_gf7_mul():
    F = PrimeField(7)
    assert F(3) * F(5) == F(1)


def test_rational_mul_cancels():
    Q = RATIONALS
    assert Q(Fraction(2, 3)) * Q(Fraction(3, 4)) == Q(Fraction(1, 2))


def test_mul_identity(field, rng):
    x = field.random_element(rng)
    assert x * field.one() == x


def test_gf7_inverse():
    F = PrimeField(7)
    assert F(3).inverse() == F(5)


def test_rational_inverse():
    Q = RATIONALS
    assert Q(Fraction(-2, 5)).inverse() == Q(Fraction(-5, 2))


def test_inverse_of_one(field):
    assert field.one().inverse() == field.one()


def test_inverse_of_zero_raises(field):
    with pytest.raises(DivisionByZero):
        field.zero().inverse()


def test_field_axioms_hold_exactly(field, rng):
    for _ in range(60):
        a = field.random_element(rng)
        b = field.random_element(rng)
        c = field.random_element(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == field.zero()
        assert a - b == a + (-b)
        if not a.is_zero():
            assert a * a.inverse() == field.one()


def test_rational_canonical_form(rng):
    Q = RATIONALS
    for _ in range(50):
        a = Q.random_element(rng)
        b = Q.random_element(rng)
        for x in (a + b, a - b, a * b):
            assert x.value.denominator > 0
            assert math.gcd(abs(x.value.numerator), x.value.denominator) == 1


def test_gfp_residue_range(rng):
    F = PrimeField(13)
    for _ in range(50):
        a = F.random_element(rng)
        b = F.random_element(rng)
        for x in (a + b, a - b, a * b, -a):
            assert 0 <= x.value < 13


def test_mixed_field_operations_raise():
    a = PrimeField(5)(2)
    b = PrimeField(7)(2)
    q = RATIONALS(2)
    for other in (b, q):
        with pytest.raises(FieldMismatch):
            a + other
        with pytest.raises(FieldMismatch):
            a * other
        with pytest.raises(FieldMismatch):
            a - other


def test_composite_modulus_rejected():
    for bad in (0, 1, 4, 9, 91):
        with pytest.raises(InvalidArgument):
            PrimeField(bad)


def test_is_prime():
    assert [p for p in range(2, 30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2147483647)
    assert not is_prime(2147483647 * 3)


def test_parse_field_codes():
    assert parse_field("Q") == RATIONALS
    assert parse_field("GF:7") == PrimeField(7)
    for bad in ("F", "GF", "GF:", "GF:abc", "GF:10"):
        with pytest.raises(InvalidArgument):
            parse_field(bad)


def test_parse_and_format_rationals():
    Q = RATIONALS
    assert str(Q.parse("3/4")) == "3/4"
    assert str(Q.parse("-3/4")) == "-3/4"
    assert str(Q.parse("5")) == "5"
    assert Q.parse(" -1 ") == Q(-1)
    with pytest.raises(InvalidArgument):
        Q.parse("x")
    with pytest.raises(InvalidArgument):
        Q.parse("1/0")


def test_parse_and_format_gfp():
    F = PrimeField(7)
    assert str(F.parse("12")) == "5"
    assert str(F.parse("-1")) == "6"
    with pytest.raises(InvalidArgument):
        F.parse("2/3")


def test_structural_equality_and_hash():
    F = PrimeField(5)
    assert F(7) == F(2)
    assert hash(F(7)) == hash(F(2))
    assert F(2) != RATIONALS(2402)
    assert RATIONALS(Fraction(4, 2)) == RATIONALS(2)


def test_int_convenience_in_formulas():
    F = PrimeField(5)
    assert F(3) + 4 == F(2)
    assert 2 * F(4) == F(3)
    assert F(3) == 3


def test_elements_are_immutable():
    x = PrimeField(5)(2)
    with pytest.raises(AttributeError):
        x.value = 3


def test_prime_field_elements_iteration():
    F = PrimeField(3)
    assert [e.value for e in F.elements()] == [0, 1, 2]


def test_rationals_reject_fraction_into_gfp():
    F = PrimeField(5)
    assert F(Fraction(3)) == F(3)
    with pytest.raises(InvalidArgument):
        F(Fraction(1, 2))
