"""Symbolic tempered distributions built from power laws.

Only the handful of term kinds that the power-law transform rules produce
are supported:

=====================  ==============================================
``DeltaDeriv(m)``      ``delta^(m)(x)``
``PfPowerSgn(b)``      ``Pf x^b sgn(x)``
``PfPower(b)``         ``Pf x^b``
``PfImagPower(s, p)``  ``Pf (s*i*x)^p`` with ``s = +1`` or ``-1``
``ThetaGatedPower``    ``Theta(side*x) * (phase*|x|)^b``
=====================  ==============================================

Fourier convention (used everywhere)::

    F f(k)      = integral f(x) exp(-i k x) dx
    F^-1 g(x)   = (1/2pi) integral g(k) exp(i k x) dk

This is the normalisation for which ``Theta(x) = (1/2pi i) lim integral
exp(ikx)/(k - i eps) dk`` and the n-ball pipeline reproduce the known
volumes.  All non-integer powers, including ``x**b`` for ``x < 0``, are taken
on the ``[-pi, pi)`` branch of :mod:`nball.branch`.

Coefficients are :class:`~nball.exact.ExactComplex` when every factor is
exact (integer and half-integer exponents), and plain ``complex`` otherwise.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from scipy import integrate

from .branch import cpow
from .errors import DomainError, NotExact, UnsupportedExpression
from .exact import ExactComplex, as_fraction, exact_cpow, format_rational
from .special import double_factorial, factorial, gamma, gamma_exact

__all__ = [
    "DeltaDeriv",
    "PfPowerSgn",
    "PfPower",
    "PfImagPower",
    "ThetaGatedPower",
    "DistTerm",
    "DistExpr",
    "ft_powerlaw",
    "ft_generic",
    "ft_half_integer",
    "eps_limit_inverse_power",
    "evaluate",
    "inverse_ft_eval",
    "ft_numeric_oracle",
    "half_line_ft",
    "format_coefficient",
]

Coefficient = Union[ExactComplex, complex]

_PHASES = {1: 0, 1j: 2, -1: -4, -1j: -2}  # phase -> angle in eighths of pi


# --------------------------------------------------------------------------
# term kinds


@dataclass(frozen=True)
class DeltaDeriv:
    order: int

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 0:
            raise DomainError(f"delta derivative order must be a non-negative int, got {self.order!r}")

    rank = 0

    def key(self):
        return (self.rank, self.order)


@dataclass(frozen=True)
class PfPowerSgn:
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", _frac(self.exponent))

    rank = 1

    def key(self):
        return (self.rank, self.exponent)


@dataclass(frozen=True)
class PfPower:
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", _frac(self.exponent))

    rank = 2

    def key(self):
        return (self.rank, self.exponent)


@dataclass(frozen=True)
class PfImagPower:
    sign: int
    exponent: Fraction

    rank = 3

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError("PfImagPower sign must be +1 or -1")
        object.__setattr__(self, "exponent", _frac(self.exponent))

    def key(self):
        return (self.rank, self.sign, self.exponent)


@dataclass(frozen=True)
class ThetaGatedPower:
    side: int
    exponent: Fraction
    phase: complex = -1j

    rank = 4

    def __post_init__(self):
        if self.side not in (1, -1):
            raise DomainError("ThetaGatedPower side must be +1 or -1")
        if complex(self.phase) not in _PHASES:
            raise DomainError("ThetaGatedPower phase must be one of 1, -1, i, -i")
        object.__setattr__(self, "phase", complex(self.phase))
        object.__setattr__(self, "exponent", _frac(self.exponent))

    def key(self):
        return (self.rank, self.side, self.exponent, self.phase.real, self.phase.imag)


Kind = Union[DeltaDeriv, PfPowerSgn, PfPower, PfImagPower, ThetaGatedPower]


def _is_zero(c: Coefficient) -> bool:
    return c.is_zero() if isinstance(c, ExactComplex) else c == 0


def _add(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, ExactComplex) and isinstance(b, ExactComplex):
        return a + b
    return complex(a) + complex(b)


def _mul(a, b):
    if isinstance(a, complex) or isinstance(b, complex):
        return complex(a) * complex(b)
    return ExactComplex.coerce(a) * ExactComplex.coerce(b)


@dataclass(frozen=True)
class DistTerm:
    coefficient: Coefficient
    kind: Kind


@dataclass(frozen=True)
class DistExpr:
    """Finite linear combination of :class:`DistTerm` in canonical order.

    Terms with the same kind are merged and zero terms dropped, so two
    expressions are equal iff their canonical term lists are equal.
    """

    terms: tuple[DistTerm, ...] = field(default_factory=tuple)

    def __post_init__(self):
        merged: dict = {}
        for t in self.terms:
            if t.kind in merged:
                merged[t.kind] = _add(merged[t.kind], t.coefficient)
            else:
                merged[t.kind] = t.coefficient
        terms = tuple(
            DistTerm(c, k)
            for k, c in sorted(merged.items(), key=lambda kc: kc[0].key())
            if not _is_zero(c)
        )
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, *pairs) -> "DistExpr":
        return cls(tuple(DistTerm(c, k) for c, k in pairs))

    def __add__(self, other: "DistExpr") -> "DistExpr":
        return DistExpr(self.terms + other.terms)

    def scale(self, c) -> "DistExpr":
        return DistExpr(tuple(DistTerm(_mul(c, t.coefficient), t.kind) for t in self.terms))

    def is_exact(self) -> bool:
        return all(isinstance(t.coefficient, ExactComplex) for t in self.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return format_expr(self)


# --------------------------------------------------------------------------
# exact-or-float helpers


def _frac(x, what="exponent") -> Fraction:
    try:
        return as_fraction(x)
    except NotExact:
        raise DomainError(f"{what} must be finite, got {x!r}") from None


def _i_power(p: Fraction) -> Coefficient:
    """``i**p`` on the branch; exact when ``2p`` is an integer."""
    if (2 * p).denominator == 1:
        return ExactComplex.zeta(int(2 * p))
    return cpow(1j, float(p))


def _exp_minus_i_pi(a: Fraction) -> Coefficient:
    if (4 * a).denominator == 1:
        return ExactComplex.zeta(int(-4 * a))
    return complex(math.cos(math.pi * a), -math.sin(math.pi * a))


def _gamma_coeff(x: Fraction) -> Coefficient:
    if (2 * x).denominator == 1:
        return gamma_exact(x)
    return complex(gamma(x))


# --------------------------------------------------------------------------
# transform rules


def ft_generic(alpha) -> DistExpr:
    """``F Pf x^alpha`` for non-integer ``alpha`` as the two-term regular distribution.

    ``Gamma(alpha+1) * (exp(-i pi alpha) Pf (-ik)^(-alpha-1) + Pf (ik)^(-alpha-1))``
    """
    a = _frac(alpha)
    if a.denominator == 1:
        raise DomainError("the two-term form applies to non-integer exponents")
    g = _gamma_coeff(a + 1)
    p = -a - 1
    return DistExpr.of(
        (_mul(g, _exp_minus_i_pi(a)), PfImagPower(-1, p)),
        (g, PfImagPower(1, p)),
    )


def ft_half_integer(m) -> DistExpr:
    """``F Pf x^(-m)`` for half-integer ``m`` (either sign).

    ``sqrt(pi) 2^(m+1/2) (-2m)!! Theta(-k) (-i|k|)^(m-1)``
    """
    m = _frac(m)
    if m.denominator != 2:
        raise DomainError(f"m must be a half-integer, got {m}")
    coeff = ExactComplex.rational(
        Fraction(2) ** int(m + Fraction(1, 2)) * double_factorial(int(-2 * m)), 1
    )
    return DistExpr.of((coeff, ThetaGatedPower(-1, m - 1, -1j)))


def ft_powerlaw(alpha, specialize: bool = True) -> DistExpr:
    """Distributional Fourier transform of ``Pf x^alpha``.

    Non-negative integers give ``2 pi i^alpha delta^(alpha)``; negative
    integers ``pi i^alpha / (-alpha-1)! Pf k^(-alpha-1) sgn(k)``; other
    exponents the two-term form of :func:`ft_generic`.  With ``specialize``
    (default) half-integer exponents use the single Theta-gated term of
    :func:`ft_half_integer` instead, which is the same distribution.
    """
    a = _frac(alpha, "alpha")
    if a.denominator == 1:
        n = int(a)
        if n >= 0:
            coeff = ExactComplex.rational(2, 2) * ExactComplex.zeta(2 * n)
            return DistExpr.of((coeff, DeltaDeriv(n)))
        coeff = ExactComplex.rational(1 / factorial(-n - 1), 2) * ExactComplex.zeta(2 * n)
        return DistExpr.of((coeff, PfPowerSgn(Fraction(-n - 1))))
    if specialize and a.denominator == 2:
        return ft_half_integer(-a)
    return ft_generic(a)


def eps_limit_inverse_power(m) -> DistExpr:
    """Limit as ``eps -> 0+`` of ``(eps + i x)^(-m-1)`` in the distribution sense.

    Integer ``m >= 1``: ``pi i^m / m! delta^(m)(x) + Pf (ix)^(-m-1)``.
    Half-integer ``m``: ``Pf (ix)^(-m-1)``.
    """
    m = _frac(m, "m")
    if m.denominator == 2:
        return DistExpr.of((ExactComplex.rational(1), PfImagPower(1, -m - 1)))
    if m.denominator == 1 and m >= 1:
        k = int(m)
        delta = ExactComplex.rational(1 / factorial(k), 2) * ExactComplex.zeta(2 * k)
        return DistExpr.of(
            (delta, DeltaDeriv(k)),
            (ExactComplex.rational(1), PfImagPower(1, -m - 1)),
        )
    raise DomainError(f"limit rule covers integers m >= 1 and half-integers, got {m}")


# --------------------------------------------------------------------------
# pointwise evaluation


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _power_at(modulus: Fraction, eighths: int, e: Fraction, exact: bool) -> Coefficient:
    """``(modulus * exp(i pi eighths/4))**e``."""
    if exact:
        return exact_cpow(modulus, eighths, e)
    base = float(modulus) * complex(math.cos(math.pi * eighths / 4), math.sin(math.pi * eighths / 4))
    if eighths == -4:
        base = complex(-float(modulus), 0.0)
    elif eighths in (2, -2):
        base = complex(0.0, math.copysign(float(modulus), eighths))
    return cpow(base, float(e))


def _term_at(kind: Kind, k: Fraction, exact: bool) -> Coefficient:
    zero = ExactComplex() if exact else 0j
    s = _sgn(k)
    if isinstance(kind, DeltaDeriv):
        if s == 0:
            raise UnsupportedExpression("delta derivative has no value at 0")
        return zero
    if s == 0:
        if isinstance(kind, (PfPowerSgn, PfPower, PfImagPower)) and kind.exponent > 0:
            return zero
        raise UnsupportedExpression(f"{format_kind(kind)} has no value at 0")
    mod = abs(k)
    angle = 0 if s > 0 else -4
    if isinstance(kind, PfPowerSgn):
        v = _power_at(mod, angle, kind.exponent, exact)
        return v if s > 0 else -v
    if isinstance(kind, PfPower):
        return _power_at(mod, angle, kind.exponent, exact)
    if isinstance(kind, PfImagPower):
        return _power_at(mod, 2 * kind.sign * s, kind.exponent, exact)
    if isinstance(kind, ThetaGatedPower):
        if kind.side * s < 0:
            return zero
        return _power_at(mod, _PHASES[kind.phase], kind.exponent, exact)
    raise UnsupportedExpression(f"unknown term kind {kind!r}")


def _point(x, exact: bool) -> Fraction:
    if exact:
        return as_fraction(x)
    return Fraction(float(x)) if not isinstance(x, Fraction) else x


def _sum(values, exact: bool) -> Coefficient:
    total = ExactComplex() if exact else 0j
    for v in values:
        total = total + v
    return total


def _require_exact(c):
    if not isinstance(c, ExactComplex):
        raise NotExact("expression has inexact coefficients")
    return c


def evaluate(expr: DistExpr, k, exact: bool = False) -> Coefficient:
    """Pointwise value at ``k`` of an expression that is a regular function there.

    Delta terms vanish away from the origin.  With ``exact`` the result is an
    :class:`ExactComplex` (raises :class:`NotExact` when impossible).
    """
    kk = _point(k, exact)
    vals = []
    for t in expr.terms:
        c = _require_exact(t.coefficient) if exact else complex(t.coefficient)
        vals.append(c * _term_at(t.kind, kk, exact))
    return _sum(vals, exact)


_TWO_PI_INV = ExactComplex.rational(Fraction(1, 2), -2)


def _inverse_term(kind: Kind, x: Fraction, exact: bool) -> Coefficient:
    """``F^-1 [kind](x)`` for a unit coefficient."""

    def lift(c):
        return c if exact else complex(c)

    if isinstance(kind, DeltaDeriv):
        m = kind.order
        # (1/2pi) * (-i x)^m
        val = ExactComplex.zeta(-2 * m) * ExactComplex.rational(x**m)
        return lift(_TWO_PI_INV * val)
    if x == 0:
        raise UnsupportedExpression(f"inverse transform of {format_kind(kind)} at 0 is not a regular value")
    if isinstance(kind, PfPower):
        # F^-1 g(x) = (1/2pi) F g(-x)
        inner = evaluate(ft_powerlaw(kind.exponent), -x, exact)
        return lift(_TWO_PI_INV) * inner
    if isinstance(kind, PfImagPower):
        # (s i k)^p = i^p (s k)^p for real k != 0
        inner = evaluate(ft_powerlaw(kind.exponent), -kind.sign * x, exact)
        ip = _i_power(kind.exponent)
        if exact:
            return _TWO_PI_INV * _require_exact(ip) * inner
        return complex(_TWO_PI_INV) * complex(ip) * inner
    if isinstance(kind, PfPowerSgn):
        b = kind.exponent
        if b.denominator != 1 or b < 0:
            raise UnsupportedExpression("inverse of Pf x^b sgn(x) implemented for integer b >= 0 only")
        j = int(b)
        # F Pf x^(-j-1) = pi i^(-j-1)/j! k^j sgn(k)
        coeff = ExactComplex.rational(factorial(j), -2) * ExactComplex.zeta(2 * (j + 1))
        val = coeff * _power_at(abs(x), 0 if x > 0 else -4, Fraction(-j - 1), True)
        return lift(val)
    if isinstance(kind, ThetaGatedPower):
        mu = kind.exponent + 1
        if kind.phase != -1j or mu.denominator != 2:
            raise UnsupportedExpression(
                "inverse of Theta-gated powers implemented for phase -i and half-integer exponents"
            )
        # Theta(-k)(-i|k|)^(mu-1) * K = F Pf x^(-mu); side +1 is the mirror image
        K = ft_half_integer(mu).terms[0].coefficient
        y = x if kind.side == -1 else -x
        val = _power_at(abs(y), 0 if y > 0 else -4, -mu, exact)
        return val / K if exact else val / complex(K)
    raise UnsupportedExpression(f"no inverse rule for {format_kind(kind)}")


def inverse_ft_eval(expr: DistExpr, x, exact: bool = False) -> Coefficient:
    """Value at ``x`` of the inverse Fourier transform of ``expr``.

    Each term uses the forward rules read in reverse.  Term kinds without a
    rule raise :class:`UnsupportedExpression`; nothing falls back to numerics.
    """
    xx = _point(x, exact)
    vals = []
    for t in expr.terms:
        c = _require_exact(t.coefficient) if exact else complex(t.coefficient)
        vals.append(c * _inverse_term(t.kind, xx, exact))
    return _sum(vals, exact)


# --------------------------------------------------------------------------
# numerical oracle for the classical window -1 < alpha < 0


def half_line_ft(alpha: float, k: float, split: float | None = None) -> complex:
    """``integral_0^inf x^alpha exp(-i k x) dx`` for ``-1 < alpha < 0``, ``k != 0``.

    The endpoint singularity is handled with an algebraic weight on
    ``[0, split]`` and the oscillatory tail with QUADPACK's Fourier-integral
    routine on ``[split, inf)``.
    """
    alpha = float(alpha)
    k = float(k)
    if not -1 < alpha < 0:
        raise DomainError(f"classical transform needs -1 < alpha < 0, got {alpha}")
    if k == 0 or not math.isfinite(k):
        raise DomainError("k must be finite and non-zero")
    w = abs(k)
    split = split if split is not None else 2 * math.pi / w
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        kw = dict(epsabs=1e-11, epsrel=1e-11, limit=200)
        c0 = integrate.quad(lambda x: math.cos(w * x), 0, split, weight="alg", wvar=(alpha, 0), **kw)[0]
        s0 = integrate.quad(lambda x: math.sin(w * x), 0, split, weight="alg", wvar=(alpha, 0), **kw)[0]
        tail = dict(weight="cos", wvar=w, epsabs=1e-11, limlst=200)
        c1 = integrate.quad(lambda x: x**alpha, split, math.inf, **tail)[0]
        tail["weight"] = "sin"
        s1 = integrate.quad(lambda x: x**alpha, split, math.inf, **tail)[0]
    cos_part = c0 + c1
    sin_part = s0 + s1
    return complex(cos_part, -math.copysign(1.0, k) * sin_part)


def ft_numeric_oracle(alpha: float, k: float) -> complex:
    """Classical ``integral x^alpha exp(-ikx) dx`` over the real line, ``-1 < alpha < 0``.

    On ``x < 0`` the integrand is ``|x|^alpha exp(-i pi alpha)`` (the branch
    value of ``x^alpha``), so the result splits into two half-line integrals.
    """
    alpha = float(alpha)
    pos = half_line_ft(alpha, k)
    neg = half_line_ft(alpha, -k)
    return pos + complex(math.cos(math.pi * alpha), -math.sin(math.pi * alpha)) * neg


# --------------------------------------------------------------------------
# pretty printing
#
#   expr   := "0" | term (" + " term | " - " term)*
#   term   := [coeff "*"] atom          coeff omitted when 1, "-" when -1
#   coeff  := ["-"] factor ("*" factor)* | "(" monomial (" + " monomial)* ")"
#   factor := rational | "i" | "exp(i*pi/4)" | "exp(3*i*pi/4)"
#           | "pi" | "pi^" int | "sqrt(pi)" | "pi^(" int "/2)"
#   atom   := "delta^(" m ")(x)" | "Pf[sgn(x)]" | "Pf[x^(" q ")*sgn(x)]"
#           | "Pf[x^(" q ")]" | "Pf[(i*x)^(" q ")]" | "Pf[(-i*x)^(" q ")]"
#           | "Theta(x)*(" ph "*|x|)^(" q ")" | "Theta(-x)*(" ph "*|x|)^(" q ")"
#
# Inexact coefficients print as "(<re>+<im>*i)" using repr of the floats.

_ZETA_NAMES = {0: "", 1: "exp(i*pi/4)", 2: "i", 3: "exp(3*i*pi/4)"}


def _pi_factor(p: int) -> str:
    if p == 0:
        return ""
    if p == 1:
        return "sqrt(pi)"
    if p == 2:
        return "pi"
    if p % 2 == 0:
        return f"pi^{p // 2}"
    return f"pi^({p}/2)"


def _monomial(q: Fraction, j: int, p: int) -> str:
    factors = []
    mag = abs(q)
    if mag != 1:
        factors.append(format_rational(mag))
    for f in (_ZETA_NAMES[j], _pi_factor(p)):
        if f:
            factors.append(f)
    body = "*".join(factors) if factors else "1"
    return ("-" if q < 0 else "") + body


def format_coefficient(c: Coefficient) -> str:
    """Coefficient text; empty string for exactly 1 and ``"-"`` for exactly -1."""
    if isinstance(c, ExactComplex):
        monos = list(c.monomials())
        if not monos:
            return "0"
        if len(monos) == 1:
            text = _monomial(*monos[0])
            return {"1": "", "-1": "-"}.get(text, text)
        parts = [_monomial(*mono) for mono in monos]
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return f"({out})"
    c = complex(c)
    return f"({c.real!r}{c.imag:+}*i)"


def _exp(q: Fraction) -> str:
    return format_rational(q)


def format_kind(kind: Kind) -> str:
    if isinstance(kind, DeltaDeriv):
        return f"delta^({kind.order})(x)"
    if isinstance(kind, PfPowerSgn):
        if kind.exponent == 0:
            return "Pf[sgn(x)]"
        return f"Pf[x^({_exp(kind.exponent)})*sgn(x)]"
    if isinstance(kind, PfPower):
        return f"Pf[x^({_exp(kind.exponent)})]"
    if isinstance(kind, PfImagPower):
        base = "i*x" if kind.sign > 0 else "-i*x"
        return f"Pf[({base})^({_exp(kind.exponent)})]"
    if isinstance(kind, ThetaGatedPower):
        gate = "Theta(x)" if kind.side > 0 else "Theta(-x)"
        ph = {1: "", -1: "-", 1j: "i*", -1j: "-i*"}[kind.phase]
        return f"{gate}*({ph}|x|)^({_exp(kind.exponent)})"
    raise UnsupportedExpression(f"unknown term kind {kind!r}")


def format_term(t: DistTerm) -> str:
    c = format_coefficient(t.coefficient)
    atom = format_kind(t.kind)
    if c == "":
        return atom
    if c == "-":
        return "-" + atom
    return f"{c}*{atom}"


def format_expr(expr: DistExpr) -> str:
    if not expr.terms:
        return "0"
    out = format_term(expr.terms[0])
    for t in expr.terms[1:]:
        text = format_term(t)
        out += " - " + text[1:] if text.startswith("-") else " + " + text
    return out
