"""Exact scalars for the closed forms.

Two types live here:

``ExactComplex``
    Elements of ``Q(z)[sqrt(pi), 1/sqrt(pi)]`` with ``z = exp(i*pi/4)``.  Every
    coefficient produced by the transform rules for integer and half-integer
    exponents (``i**(1/2)``, ``exp(-i*pi*alpha)``, ``sqrt(2)``, ``Gamma(1/2)``,
    ...) is such an element, so the distributional pipeline can run without
    rounding.  Stored as ``{pi_half_power: (a0, a1, a2, a3)}`` meaning
    ``sum_p pi**(p/2) * sum_j a_j z**j`` with ``z**4 == -1``; this basis is
    canonical because ``pi`` is transcendental.

``ExactValue``
    The real monomial ``coeff * pi**(pi_half_power/2) * r**r_power`` that every
    ball volume reduces to, with a small text grammar::

        value    := rational [" * " pi_term] [" * " r_term]
        rational := ["-"] digits ["/" digits]
        pi_term  := "pi" | "pi^" int | "pi^(" odd_int "/2)"
        r_term   := "r" | "r^" int

    e.g. ``"4/3 * pi"``, ``"1/2 * pi^-1"``, ``"8/15 * pi^2"``, ``"1 * pi * r^3"``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotExact

__all__ = [
    "ExactComplex",
    "ExactValue",
    "as_fraction",
    "rational_power",
    "exact_cpow",
    "format_rational",
]

_ZETA = [complex(math.cos(j * math.pi / 4), math.sin(j * math.pi / 4)) for j in range(4)]
_ZERO4 = (Fraction(0),) * 4


def as_fraction(x) -> Fraction:
    """Exact rational for ints, Fractions, decimal strings and finite floats.

    Floats go through ``repr`` so ``0.1`` becomes ``1/10`` rather than its
    binary expansion.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a number here")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise NotExact(f"non-finite value {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x)
    raise NotExact(f"{x!r} has no exact rational form")


def _vec_mul(a, b):
    out = [Fraction(0)] * 4
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj:
                continue
            k = i + j
            if k >= 4:
                out[k - 4] -= ai * bj
            else:
                out[k] += ai * bj
    return tuple(out)


def _galois(a, k):
    # z -> z**k for k in {1, 3, 5, 7}
    out = [Fraction(0)] * 4
    for j, aj in enumerate(a):
        if not aj:
            continue
        e = (j * k) % 8
        if e >= 4:
            out[e - 4] -= aj
        else:
            out[e] += aj
    return tuple(out)


class ExactComplex:
    """Exact element of ``Q(exp(i*pi/4))[sqrt(pi), 1/sqrt(pi)]``."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for p, vec in (terms or {}).items():
            vec = tuple(Fraction(v) for v in vec)
            if any(vec):
                clean[int(p)] = vec
        self._terms = tuple(sorted(clean.items()))

    # constructors ---------------------------------------------------------
    @classmethod
    def rational(cls, q, pi_half_power: int = 0) -> "ExactComplex":
        return cls({pi_half_power: (as_fraction(q), 0, 0, 0)})

    @classmethod
    def zeta(cls, j: int) -> "ExactComplex":
        """``exp(i*pi*j/4)``."""
        j %= 8
        sign = 1
        if j >= 4:
            j, sign = j - 4, -1
        vec = [0, 0, 0, 0]
        vec[j] = sign
        return cls({0: vec})

    @classmethod
    def pi_power(cls, pi_half_power: int) -> "ExactComplex":
        return cls.rational(1, pi_half_power)

    @classmethod
    def sqrt2(cls) -> "ExactComplex":
        return cls({0: (0, 1, 0, -1)})

    @classmethod
    def coerce(cls, x) -> "ExactComplex":
        if isinstance(x, ExactComplex):
            return x
        if isinstance(x, ExactValue):
            if x.r_power:
                raise NotExact("symbolic radius has no scalar value")
            return cls.rational(x.coeff, x.pi_half_power)
        if isinstance(x, complex):
            if x.imag == 0:
                return cls.rational(x.real)
            raise NotExact(f"float complex {x!r} is not exact")
        return cls.rational(x)

    # inspection -----------------------------------------------------------
    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def monomials(self):
        """Yield ``(rational, zeta_power, pi_half_power)`` with non-zero rationals."""
        for p, vec in self._terms:
            for j, a in enumerate(vec):
                if a:
                    yield a, j, p

    def as_real_monomial(self) -> tuple[Fraction, int]:
        """Return ``(q, p)`` if the value is ``q * pi**(p/2)`` with rational ``q``."""
        if not self._terms:
            return Fraction(0), 0
        if len(self._terms) == 1:
            p, vec = self._terms[0]
            if not any(vec[1:]):
                return vec[0], p
        raise NotExact(f"{self} is not a rational multiple of a power of pi")

    def __complex__(self) -> complex:
        total = 0j
        for p, vec in self._terms:
            inner = sum(float(a) * _ZETA[j] for j, a in enumerate(vec) if a)
            total += inner * math.pi ** (p / 2)
        return complex(total)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            other = ExactComplex.coerce(other)
        except (NotExact, TypeError):
            return NotImplemented
        terms = self.terms
        for p, vec in other._terms:
            base = terms.get(p, _ZERO4)
            terms[p] = tuple(x + y for x, y in zip(base, vec))
        return ExactComplex(terms)

    __radd__ = __add__

    def __neg__(self):
        return ExactComplex({p: tuple(-v for v in vec) for p, vec in self._terms})

    def __sub__(self, other):
        try:
            other = ExactComplex.coerce(other)
        except (NotExact, TypeError):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = ExactComplex.coerce(other)
        except (NotExact, TypeError):
            return NotImplemented
        terms: dict[int, tuple] = {}
        for p, a in self._terms:
            for q, b in other._terms:
                prod = _vec_mul(a, b)
                base = terms.get(p + q, _ZERO4)
                terms[p + q] = tuple(x + y for x, y in zip(base, prod))
        return ExactComplex(terms)

    __rmul__ = __mul__

    def inverse(self) -> "ExactComplex":
        if len(self._terms) != 1:
            raise NotExact("only single-power-of-pi elements are invertible here")
        p, a = self._terms[0]
        # product of the non-trivial conjugates; a * conj is the (rational) norm
        conj = _vec_mul(_vec_mul(_galois(a, 3), _galois(a, 5)), _galois(a, 7))
        norm = _vec_mul(a, conj)[0]
        return ExactComplex({-p: tuple(c / norm for c in conj)})

    def __truediv__(self, other):
        try:
            other = ExactComplex.coerce(other)
        except (NotExact, TypeError):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ExactComplex.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ExactComplex.rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            other = ExactComplex.coerce(other)
        except (NotExact, TypeError):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"ExactComplex({self})"

    def __str__(self):
        from .distributions import format_coefficient

        return format_coefficient(self) or "1"


def _iroot(n: int, k: int) -> int | None:
    """Exact integer k-th root of ``n >= 0``, or None."""
    if n < 2:
        return n
    if k == 2:
        r = math.isqrt(n)
        return r if r * r == n else None
    r = round(n ** (1.0 / k)) if n < 2**1000 else int(math.exp(math.log(n) / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    # Newton refinement for large n
    x = r
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    for cand in (x - 1, x, x + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def rational_power(q, e) -> ExactComplex:
    """``q**e`` for rational ``q > 0`` and rational ``e``, when exactly representable."""
    q = as_fraction(q)
    e = as_fraction(e)
    if q <= 0:
        raise NotExact("rational_power needs a positive base")
    a, b = e.numerator, e.denominator
    num = _iroot(q.numerator, b)
    den = _iroot(q.denominator, b)
    if num is not None and den is not None:
        return ExactComplex.rational(Fraction(num, den) ** a)
    if b == 2:
        # sqrt(q) = s * sqrt(2) when q = 2 * s**2
        half = q / 2
        num = _iroot(half.numerator, 2)
        den = _iroot(half.denominator, 2)
        if num is not None and den is not None:
            return (ExactComplex.sqrt2() * Fraction(num, den)) ** a
    raise NotExact(f"{q}**({e}) is not in the exact ring")


def exact_cpow(modulus, eighths: int, e) -> ExactComplex:
    """``(modulus * exp(i*pi*eighths/4)) ** e`` on the ``[-pi, pi)`` branch.

    ``eighths`` must lie in ``[-4, 4)``; ``eighths * e`` must be an integer.
    """
    if not -4 <= eighths < 4:
        raise ValueError("angle index outside the branch interval [-pi, pi)")
    e = as_fraction(e)
    turn = eighths * e
    if turn.denominator != 1:
        raise NotExact(f"phase exp(i*pi*{turn}/4) is not an eighth root of unity")
    return rational_power(modulus, e) * ExactComplex.zeta(int(turn))


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


_VALUE_RE = re.compile(
    r"""^\s*(?P<coeff>-?\d+(?:/\d+)?)
        (?:\s*\*\s*pi(?:\^(?:(?P<pint>-?\d+)|\((?P<phalf>-?\d+)/2\)))?(?P<haspi>))?
        (?:\s*\*\s*r(?:\^(?P<rpow>-?\d+))?(?P<hasr>))?\s*$""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class ExactValue:
    """``coeff * pi**(pi_half_power/2) * r**r_power`` with rational ``coeff``."""

    coeff: Fraction
    pi_half_power: int = 0
    r_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            object.__setattr__(self, "pi_half_power", 0)
            object.__setattr__(self, "r_power", 0)

    @classmethod
    def from_exact(cls, value: ExactComplex, r_power: int = 0) -> "ExactValue":
        q, p = value.as_real_monomial()
        return cls(q, p, r_power)

    def to_exact(self) -> ExactComplex:
        return ExactComplex.coerce(self)

    def evaluate(self, r=1.0) -> float:
        return float(self.coeff) * math.pi ** (self.pi_half_power / 2) * float(r) ** self.r_power

    def __float__(self) -> float:
        if self.r_power:
            raise TypeError("value depends on the symbolic radius; use evaluate(r)")
        return self.evaluate()

    def substitute(self, r) -> "ExactValue":
        """Fold a rational radius into the coefficient."""
        r = as_fraction(r)
        return ExactValue(self.coeff * r**self.r_power, self.pi_half_power, 0)

    def __mul__(self, other):
        if isinstance(other, ExactValue):
            return ExactValue(
                self.coeff * other.coeff,
                self.pi_half_power + other.pi_half_power,
                self.r_power + other.r_power,
            )
        if isinstance(other, (int, Fraction)):
            return ExactValue(self.coeff * other, self.pi_half_power, self.r_power)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExactValue):
            return ExactValue(
                self.coeff / other.coeff,
                self.pi_half_power - other.pi_half_power,
                self.r_power - other.r_power,
            )
        if isinstance(other, (int, Fraction)):
            return ExactValue(self.coeff / other, self.pi_half_power, self.r_power)
        return NotImplemented

    def __str__(self):
        parts = [format_rational(self.coeff)]
        p = self.pi_half_power
        if p:
            if p == 2:
                parts.append("pi")
            elif p % 2 == 0:
                parts.append(f"pi^{p // 2}")
            else:
                parts.append(f"pi^({p}/2)")
        if self.r_power:
            parts.append("r" if self.r_power == 1 else f"r^{self.r_power}")
        return " * ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "ExactValue":
        m = _VALUE_RE.match(text)
        if not m:
            raise ValueError(f"not an exact value: {text!r}")
        coeff = Fraction(m["coeff"])
        p = 0
        if m["haspi"] is not None:
            if m["pint"] is not None:
                p = 2 * int(m["pint"])
            elif m["phalf"] is not None:
                p = int(m["phalf"])
            else:
                p = 2
        r = 0
        if m["hasr"] is not None:
            r = int(m["rpow"]) if m["rpow"] is not None else 1
        return cls(coeff, p, r)
