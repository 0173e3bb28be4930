import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qact import (
    DivisionByZero,
    InvalidQ,
    ParseError,
    Scalar,
    as_scalar,
    format_scalar,
    parse_scalar,
    scalar_arith,
    validate_q,
)
from qact.scalars import EXCLUDED_Q, I, ONE, ZERO

ints = st.integers(min_value=-30, max_value=30)
posints = st.integers(min_value=1, max_value=30)
scalars = st.builds(Scalar, ints, ints, posints)
nonzero_scalars = scalars.filter(bool)


def test_spec_arithmetic_examples():
    one_plus_i = Scalar(1, 1)
    one_minus_i = Scalar(1, -1)
    assert one_plus_i * one_minus_i == Scalar(2)
    assert scalar_arith(Scalar(2), Scalar(2), "div") == ONE
    assert Scalar(3, 1, 2) + Scalar(-3, -1, 2) == ZERO


def test_canonical_form():
    s = Scalar(2, 4, 6)
    assert (s.a, s.b, s.d) == (1, 2, 3)
    s = Scalar(3, -3, -6)
    assert (s.a, s.b, s.d) == (-1, 1, 2)
    assert Scalar(0, 0, 17) == ZERO


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        scalar_arith(ONE, ZERO, "div")
    with pytest.raises(DivisionByZero):
        ZERO.inv()
    with pytest.raises(DivisionByZero):
        Scalar(1, 0, 0)


@given(scalars, scalars, scalars)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@given(nonzero_scalars)
def test_multiplicative_inverse(x):
    assert x * x.inv() == ONE
    assert x ** -1 == x.inv()


@given(scalars)
def test_result_is_canonical(x):
    y = x * Scalar(6, -4, 9) + Scalar(1, 0, 7)
    from math import gcd

    assert y.d > 0
    assert gcd(gcd(abs(y.a), abs(y.b)), y.d) == 1


def test_bulk_random_triples():
    rng = random.Random(1234)
    for _ in range(1000):
        x, y, z = (Scalar(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if x:
            assert x * x.inv() == ONE


def test_powers():
    q = Scalar(2)
    assert q ** 0 == ONE
    assert q ** 3 == Scalar(8)
    assert q ** -2 == Scalar(1, 0, 4)
    assert I ** 2 == Scalar(-1)


def test_parse_examples():
    assert parse_scalar("3/2-1/2i") == Scalar(3, -1, 2)
    assert parse_scalar("0") == ZERO
    assert format_scalar(parse_scalar("7")) == "7"


def test_parse_lenient_imaginary():
    assert parse_scalar("i") == I
    assert parse_scalar("-i") == -I
    assert parse_scalar("1+i") == Scalar(1, 1)
    assert parse_scalar("2i") == Scalar(0, 2)


@pytest.mark.parametrize("bad", ["", "3//2", "1+", "abc", "1+2", "1/0", "2x", "1+1i3"])
def test_parse_errors(bad):
    with pytest.raises(ParseError) as err:
        parse_scalar(bad)
    assert err.value.position >= 0


@given(scalars)
def test_format_round_trip(s):
    assert parse_scalar(format_scalar(s)) == s


def test_format_canonical():
    assert format_scalar(Scalar(0, 1)) == "0+1i"
    assert format_scalar(Scalar(-3, 0, 2)) == "-3/2"
    assert format_scalar(Scalar(1, -1, 3)) == "1/3-1/3i"


def test_json_round_trip():
    from qact.scalars import scalar_from_json

    s = Scalar(3, -1, 2)
    assert s.to_json() == {"re": "3/2", "im": "-1/2"}
    assert scalar_from_json(s.to_json()) == s
    assert scalar_from_json("3/2-1/2i") == s
    assert scalar_from_json(5) == Scalar(5)


def test_validate_q_accepts_and_rejects():
    assert validate_q(2).q == Scalar(2)
    assert validate_q(Scalar(1, 1)).q == Scalar(1, 1)
    assert validate_q(Scalar(0, 2)).q == Scalar(0, 2)  # 2i is no root of unity
    assert validate_q(Fraction(1, 2)).q == Scalar(1, 0, 2)
    for bad in (0, 1, -1, I, -I):
        with pytest.raises(InvalidQ):
            validate_q(bad)


def test_validate_q_rejects_exactly_the_roots_of_unity():
    assert len(EXCLUDED_Q) == 5
    for s in EXCLUDED_Q:
        assert s.is_zero or (s * s * s * s) == ONE


@given(st.integers(-30, 30), st.integers(1, 30))
def test_validate_q_accepts_generic_rationals(num, den):
    f = Fraction(num, den)
    if f != 0 and abs(f.numerator) != f.denominator:
        assert validate_q(f).q == as_scalar(f)


def test_scalar_arith_dispatch():
    a, b = Scalar(3, 1, 2), Scalar(1, -1)
    assert scalar_arith(a, b, "add") == a + b
    assert scalar_arith(a, b, "sub") == a - b
    assert scalar_arith(a, b, "mul") == a * b
    assert scalar_arith(a, b, "div") == a / b
    with pytest.raises(ValueError):
        scalar_arith(a, b, "pow")


def test_int_and_fraction_coercion():
    assert Scalar(3) + 1 == Scalar(4)
    assert 2 * Scalar(1, 1) == Scalar(2, 2)
    assert Scalar(1) / 2 == Scalar(1, 0, 2)
    assert Scalar(1) + Fraction(1, 2) == Scalar(3, 0, 2)
    assert 1 - Scalar(0, 1) == Scalar(1, -1)
