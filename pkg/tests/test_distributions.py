import cmath
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nball.distributions import (
    DeltaDeriv,
    DistExpr,
    PfImagPower,
    PfPower,
    PfPowerSgn,
    ThetaGatedPower,
    eps_limit_inverse_power,
    evaluate,
    ft_generic,
    ft_half_integer,
    ft_numeric_oracle,
    ft_powerlaw,
    half_line_ft,
    inverse_ft_eval,
)
from nball.errors import DomainError, NotExact, UnsupportedExpression
from nball.exact import ExactComplex

POINTS = [-2, -1, -0.5, 0.5, 1, 2]


@pytest.mark.parametrize(
    "alpha, text",
    [
        (0, "2*pi*delta^(0)(x)"),
        (1, "2*i*pi*delta^(1)(x)"),
        (2, "-2*pi*delta^(2)(x)"),
        (-1, "-i*pi*Pf[sgn(x)]"),
        (-2, "-pi*Pf[x^(1)*sgn(x)]"),
        (-0.5, "2*sqrt(pi)*Theta(-x)*(-i*|x|)^(-1/2)"),
        (0.5, "sqrt(pi)*Theta(-x)*(-i*|x|)^(-3/2)"),
        (-1.5, "-4*sqrt(pi)*Theta(-x)*(-i*|x|)^(1/2)"),
    ],
)
def test_ft_golden(alpha, text):
    assert str(ft_powerlaw(alpha)) == text


@pytest.mark.parametrize(
    "m, text",
    [
        (1, "i*pi*delta^(1)(x) + Pf[(i*x)^(-2)]"),
        (2, "-1/2*pi*delta^(2)(x) + Pf[(i*x)^(-3)]"),
        (0.5, "Pf[(i*x)^(-3/2)]"),
        (-0.5, "Pf[(i*x)^(-1/2)]"),
    ],
)
def test_eps_limit_golden(m, text):
    assert str(eps_limit_inverse_power(m)) == text


def test_inexact_coefficients_print_in_parentheses():
    text = str(ft_powerlaw(0.25))
    assert text.count("(") >= 2 and "*i)" in text


def test_canonical_merge_and_drop():
    one = ExactComplex.rational(1)
    a = DistExpr.of((one, PfPower(Fraction(-1, 2))), (one, DeltaDeriv(0)))
    b = DistExpr.of((one, DeltaDeriv(0)), (one, PfPower(Fraction(-1, 2))))
    assert a == b
    assert len(a + a) == 2
    assert len(a + a.scale(-1)) == 0
    assert str(a + a.scale(-1)) == "0"
    merged = a + a
    assert all(t.coefficient == 2 for t in merged.terms)


def test_scale_is_linear():
    e = ft_powerlaw(-0.5)
    c = ExactComplex.zeta(1) * 3
    for k in POINTS:
        assert cmath.isclose(evaluate(e.scale(c), k), complex(c) * evaluate(e, k), abs_tol=1e-13)


@pytest.mark.parametrize("a, b", [(-0.5, -0.75), (0.25, -1.5), (-0.3, 0.7)])
def test_sum_evaluates_to_sum(a, b):
    ea, eb = ft_powerlaw(a), ft_powerlaw(b)
    for k in POINTS:
        assert cmath.isclose(evaluate(ea + eb, k), evaluate(ea, k) + evaluate(eb, k), abs_tol=1e-12)


@pytest.mark.parametrize("alpha", [-0.5, 0.5, -1.5, 1.5, -2.5, 3.5])
@pytest.mark.parametrize("k", POINTS)
def test_two_term_form_agrees_with_half_integer_row(alpha, k):
    a = evaluate(ft_generic(alpha), k)
    b = evaluate(ft_half_integer(-alpha), k)
    assert abs(a - b) <= 1e-10 * max(1.0, abs(a))


@pytest.mark.parametrize("alpha", [-0.5, -0.75, -0.25, -0.9])
@pytest.mark.parametrize("k", POINTS)
def test_transform_matches_classical_integral(alpha, k):
    assert abs(evaluate(ft_powerlaw(alpha), k) - ft_numeric_oracle(alpha, k)) <= 1e-6


def test_half_integer_transform_vanishes_for_positive_k():
    for k in (0.5, 1, 2):
        assert evaluate(ft_powerlaw(-0.5), k) == 0
        assert abs(ft_numeric_oracle(-0.5, k)) <= 1e-7


@pytest.mark.parametrize("alpha", [-0.5, -0.75, -0.2])
@pytest.mark.parametrize("k", [0.5, 1, 2])
def test_half_line_conjugate_symmetry(alpha, k):
    assert cmath.isclose(half_line_ft(alpha, -k), half_line_ft(alpha, k).conjugate(), abs_tol=1e-10)


@pytest.mark.parametrize("alpha", [-0.5, -0.75])
def test_half_line_closed_form(alpha):
    # integral_0^inf x^a exp(-ix) dx = Gamma(a+1) exp(-i pi (a+1)/2)
    ref = math.gamma(alpha + 1) * cmath.exp(-1j * math.pi * (alpha + 1) / 2)
    assert cmath.isclose(half_line_ft(alpha, 1), ref, abs_tol=1e-9)


def test_oracle_domain():
    with pytest.raises(DomainError):
        half_line_ft(0.5, 1)
    with pytest.raises(DomainError):
        half_line_ft(-0.5, 0)


def test_delta_inverse_is_constant():
    for x in (-3, 0, 0.5, 7):
        assert inverse_ft_eval(ft_powerlaw(0), x, exact=True) == 1


@pytest.mark.parametrize("m", range(1, 11))
def test_eps_limit_inverse_integer(m):
    # F^-1 (eps + ik)^(-m-1) = Theta(x) x^m exp(-eps x) / m!
    assert inverse_ft_eval(eps_limit_inverse_power(m), 1, exact=True) == ExactComplex.rational(
        Fraction(1, math.factorial(m))
    )
    assert inverse_ft_eval(eps_limit_inverse_power(m), -1, exact=True).is_zero


@pytest.mark.parametrize("m", [Fraction(1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(-1, 2), Fraction(21, 2)])
@pytest.mark.parametrize("x", [Fraction(1), Fraction(4), Fraction(1, 4)])
def test_eps_limit_inverse_half_integer(m, x):
    got = complex(inverse_ft_eval(eps_limit_inverse_power(m), x, exact=True))
    ref = float(mpmath.power(x, m) / mpmath.gamma(m + 1))
    assert abs(got - ref) <= 1e-13 * ref
    assert inverse_ft_eval(eps_limit_inverse_power(m), -x, exact=True).is_zero


def test_eps_limit_small_cases_exact():
    sqrt_pi_inv = ExactComplex.rational(1, -1)
    assert inverse_ft_eval(eps_limit_inverse_power(Fraction(1, 2)), 1, exact=True) == sqrt_pi_inv * 2
    assert (
        inverse_ft_eval(eps_limit_inverse_power(Fraction(3, 2)), 1, exact=True)
        == sqrt_pi_inv * Fraction(4, 3)
    )


@given(
    st.fractions(min_value=-3, max_value=4, max_denominator=8).filter(lambda a: a.denominator > 1),
    st.sampled_from([-2.5, -1, -0.3, 0.3, 1, 2.5]),
)
def test_inverse_of_transform_is_identity(alpha, x):
    got = inverse_ft_eval(ft_powerlaw(alpha), x)
    ref = mpmath.power(mpmath.mpc(x), mpmath.mpf(alpha.numerator) / alpha.denominator)
    if x < 0:
        # branch value on the negative axis: |x|^a exp(-i pi a)
        ref = abs(x) ** float(alpha) * cmath.exp(-1j * math.pi * float(alpha))
    assert abs(got - complex(ref)) <= 1e-11 * max(1.0, abs(got))


@pytest.mark.parametrize("n", range(-5, 0))
def test_inverse_of_negative_integer_power(n):
    for x in (Fraction(1, 2), Fraction(-3)):
        assert inverse_ft_eval(ft_powerlaw(n), x, exact=True) == ExactComplex.rational(x**n)


def test_exact_evaluation_refuses_inexact():
    with pytest.raises(NotExact):
        evaluate(ft_powerlaw(0.25), 1, exact=True)


def test_unsupported_inverse_rules():
    one = ExactComplex.rational(1)
    with pytest.raises(UnsupportedExpression):
        inverse_ft_eval(DistExpr.of((one, ThetaGatedPower(-1, Fraction(-1, 2), 1))), 1)
    with pytest.raises(UnsupportedExpression):
        inverse_ft_eval(DistExpr.of((one, PfPowerSgn(Fraction(1, 2)))), 1)
    with pytest.raises(UnsupportedExpression):
        inverse_ft_eval(DistExpr.of((one, PfImagPower(1, Fraction(-3, 2)))), 0)


@pytest.mark.parametrize("m", [0, -1, Fraction(1, 3)])
def test_eps_limit_domain(m):
    with pytest.raises(DomainError):
        eps_limit_inverse_power(m)


def test_generic_rejects_integers():
    with pytest.raises(DomainError):
        ft_generic(2)
    with pytest.raises(DomainError):
        ft_half_integer(1)
