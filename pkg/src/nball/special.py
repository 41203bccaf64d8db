"""Factorials, double factorials and the Gamma function.

Double factorials of negative odd integers are defined through the
reflection ``(-n)!! * n!! == (-1)**((n-1)/2) * n`` rather than by extending
the product, e.g. ``(-1)!! = 1``, ``(-3)!! = -1``, ``(-5)!! = 1/3``.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError
from .exact import ExactComplex, as_fraction

__all__ = ["factorial", "double_factorial", "gamma", "gamma_exact"]


def _as_int(n, what: str) -> int:
    if isinstance(n, bool):
        raise TypeError(f"{what} must be an integer")
    if isinstance(n, (Fraction, float)):
        if n != int(n):
            raise DomainError(f"{what} must be an integer, got {n}")
        n = int(n)
    if not isinstance(n, int):
        raise TypeError(f"{what} must be an integer, got {type(n).__name__}")
    return n


def factorial(n) -> Fraction:
    n = _as_int(n, "n")
    if n < 0:
        raise DomainError(f"factorial has a pole at {n}")
    return Fraction(math.factorial(n))


def _positive_double_factorial(n: int) -> int:
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def double_factorial(n) -> Fraction:
    """``n!!`` for ``n >= 0`` or odd ``n < 0``.

    >>> double_factorial(-5)
    Fraction(1, 3)
    """
    n = _as_int(n, "n")
    if n >= 0:
        return Fraction(_positive_double_factorial(n))
    if n % 2 == 0:
        raise DomainError(f"double factorial is not defined for negative even {n}")
    k = -n
    sign = -1 if ((k - 1) // 2) % 2 else 1
    return Fraction(sign * k, _positive_double_factorial(k))


def gamma_exact(x) -> ExactComplex:
    """Exact ``Gamma(x)`` for integer or half-integer ``x`` off the poles.

    The result is ``q`` (integer ``x``) or ``q * sqrt(pi)`` (half-integer ``x``).
    """
    x = as_fraction(x)
    if x.denominator == 1:
        if x <= 0:
            raise DomainError(f"Gamma has a pole at {x}")
        return ExactComplex.rational(math.factorial(int(x) - 1))
    if x.denominator != 2:
        raise DomainError(f"no exact Gamma at {x}")
    # Gamma(k + 1/2) = (2k-1)!! / 2**k * sqrt(pi); below 1/2 recurse downward
    k = int(x - Fraction(1, 2))
    if k >= 0:
        q = Fraction(_positive_double_factorial(2 * k - 1), 2**k)
    else:
        q = Fraction(1)
        y = Fraction(1, 2)
        while y > x:
            y -= 1
            q /= y
    return ExactComplex.rational(q, 1)


def gamma(x) -> float:
    """``Gamma(x)`` for real ``x`` away from the non-positive integers."""
    if isinstance(x, float) and not math.isfinite(x):
        raise DomainError(f"Gamma of non-finite {x!r}")
    xf = float(x)
    if xf <= 0 and xf == math.floor(xf):
        raise DomainError(f"Gamma has a pole at {x}")
    try:
        q = as_fraction(x)
    except Exception:
        q = None
    if q is not None and q.denominator <= 2 and abs(q) < 170:
        return complex(gamma_exact(q)).real
    try:
        return math.gamma(xf)
    except OverflowError:
        raise DomainError(f"Gamma({x}) overflows") from None
