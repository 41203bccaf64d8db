import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nball.errors import NotExact
from nball.exact import ExactComplex, ExactValue, as_fraction, exact_cpow, rational_power

Z = ExactComplex.zeta


def test_zeta_cycle():
    assert Z(8) == ExactComplex.rational(1)
    assert Z(4) == ExactComplex.rational(-1)
    assert Z(2) * Z(2) == -1
    assert Z(-3) == Z(5)


def test_sqrt2_is_in_the_ring():
    s = ExactComplex.sqrt2()
    assert s * s == 2
    assert abs(complex(s) - math.sqrt(2)) < 1e-15


def test_pi_powers_multiply():
    a = ExactComplex.rational(Fraction(3, 4), 1)
    b = ExactComplex.rational(2, 3)
    assert a * b == ExactComplex.rational(Fraction(3, 2), 4)


@pytest.mark.parametrize(
    "x",
    [
        ExactComplex.rational(3, 2),
        Z(1) * Fraction(2, 7),
        Z(1) + Z(2) * 3 - 5,
        ExactComplex.sqrt2() * ExactComplex.rational(1, -1),
    ],
)
def test_inverse(x):
    assert x * x.inverse() == 1
    assert abs(complex(x) * complex(x.inverse()) - 1) < 1e-14


def test_inverse_needs_single_pi_power():
    with pytest.raises(NotExact):
        (ExactComplex.rational(1) + ExactComplex.rational(1, 2)).inverse()


def test_as_real_monomial():
    assert ExactComplex.rational(Fraction(4, 3), 2).as_real_monomial() == (Fraction(4, 3), 2)
    with pytest.raises(NotExact):
        Z(2).as_real_monomial()
    with pytest.raises(NotExact):
        ExactComplex.sqrt2().as_real_monomial()


@pytest.mark.parametrize(
    "q, e, expected",
    [(4, Fraction(1, 2), 2), (Fraction(1, 9), Fraction(-1, 2), 3), (8, Fraction(2, 3), 4), (27, Fraction(-1, 3), Fraction(1, 3))],
)
def test_rational_power(q, e, expected):
    assert rational_power(q, e) == expected


def test_rational_power_sqrt2_and_failure():
    assert rational_power(8, Fraction(1, 2)) == ExactComplex.sqrt2() * 2
    with pytest.raises(NotExact):
        rational_power(3, Fraction(1, 2))


@pytest.mark.parametrize(
    "mod, eighths, e",
    [(1, 2, Fraction(1, 2)), (1, -4, Fraction(1, 2)), (4, -2, Fraction(-3, 2)), (9, 2, Fraction(-1, 2))],
)
def test_exact_cpow_matches_float_branch(mod, eighths, e):
    from nball.branch import cpow

    z = mod * cmath.exp(1j * math.pi * eighths / 4)
    if eighths == -4:
        z = complex(-mod, 0.0)
    assert abs(complex(exact_cpow(mod, eighths, e)) - cpow(z, float(e))) < 1e-14


def test_exact_cpow_rejects_irrational_phase():
    with pytest.raises(NotExact):
        exact_cpow(1, 2, Fraction(1, 4))


def test_as_fraction_uses_decimal_repr():
    assert as_fraction(0.1) == Fraction(1, 10)
    assert as_fraction("-0.75") == Fraction(-3, 4)
    with pytest.raises(NotExact):
        as_fraction(float("inf"))


@pytest.mark.parametrize(
    "text, value",
    [
        ("4/3 * pi", ExactValue(Fraction(4, 3), 2)),
        ("1/2 * pi^-1", ExactValue(Fraction(1, 2), -2)),
        ("8/15 * pi^2", ExactValue(Fraction(8, 15), 4)),
        ("2", ExactValue(2)),
        ("1 * pi^(3/2)", ExactValue(1, 3)),
        ("1 * pi^-1 * r^-1", ExactValue(1, -2, -1)),
        ("-5/7 * r", ExactValue(Fraction(-5, 7), 0, 1)),
    ],
)
def test_exact_value_grammar(text, value):
    assert str(value) == text
    assert ExactValue.parse(text) == value


@pytest.mark.parametrize("bad", ["pi", "4/3 pi", "1 * pi^x", "1 * r * pi"])
def test_exact_value_parse_rejects(bad):
    with pytest.raises(ValueError):
        ExactValue.parse(bad)


@given(
    st.fractions(max_denominator=10**6).filter(lambda q: q != 0),
    st.integers(-40, 40),
    st.integers(-20, 20),
)
def test_exact_value_roundtrip(q, p, r):
    v = ExactValue(q, p, r)
    assert ExactValue.parse(str(v)) == v


def test_exact_value_float_and_arithmetic():
    v = ExactValue(Fraction(4, 3), 2)
    assert abs(float(v) - 4 * math.pi / 3) <= 1e-14 * float(v)
    assert v / ExactValue(2) == ExactValue(Fraction(2, 3), 2)
    assert ExactValue(1, 0, 3).substitute(Fraction(1, 2)) == ExactValue(Fraction(1, 8))
    with pytest.raises(TypeError):
        float(ExactValue(1, 0, 1))
