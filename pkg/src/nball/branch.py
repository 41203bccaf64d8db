"""Complex logarithm and power on the branch with argument in [-pi, pi).

The half-open interval puts the negative real axis at angle ``-pi``, so
``log(-1) == -i*pi``.  This differs from :func:`cmath.log`, which uses
``(-pi, pi]`` and returns ``+i*pi`` there.  Every multivalued quantity in
the package (``i**alpha``, ``exp(-i*pi*alpha)``, ``(eps + i*k)**(-s)``, ...)
goes through :func:`cpow` so the convention is applied in one place.

Complex values are plain Python :class:`complex` objects; comparisons use
:func:`close` with an explicit absolute tolerance.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Number

from .errors import DomainError

__all__ = [
    "DEFAULT_TOL",
    "as_complex",
    "close",
    "principal_log",
    "cpow",
    "appendix_identity",
]

DEFAULT_TOL = 1e-12


def as_complex(z) -> complex:
    """Coerce a number to :class:`complex`, rejecting NaN and infinities."""
    if isinstance(z, Fraction):
        z = float(z)
    elif not isinstance(z, Number):
        try:
            z = complex(z)
        except TypeError:
            raise TypeError(f"cannot interpret {z!r} as a complex number") from None
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite complex value {z!r}")
    return z


def close(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Absolute-tolerance equality for complex values."""
    return abs(as_complex(a) - as_complex(b)) <= tol


def _arg(z: complex) -> float:
    # math.atan2 returns +pi for (re < 0, im == +0.0); the branch wants -pi.
    if z.imag == 0.0 and z.real < 0.0:
        return -math.pi
    phi = math.atan2(z.imag, z.real)
    return -math.pi if phi >= math.pi else phi


def principal_log(z) -> complex:
    """``log|z| + i*arg(z)`` with ``arg(z)`` in ``[-pi, pi)``.

    >>> principal_log(-1)
    -3.141592653589793j
    """
    z = as_complex(z)
    if z == 0:
        raise DomainError("logarithm of zero")
    return complex(math.log(abs(z)), _arg(z))


def cpow(z, w) -> complex:
    """``z**w`` defined as ``exp(w * principal_log(z))``.

    A zero base is allowed only with a positive real exponent, giving 0.
    """
    z = as_complex(z)
    w = as_complex(w)
    if z == 0:
        if w.imag == 0 and w.real > 0:
            return 0j
        raise DomainError(f"0 ** {w!r} is undefined")
    result = cmath.exp(w * principal_log(z))
    if not (math.isfinite(result.real) and math.isfinite(result.imag)):
        raise DomainError(f"{z!r} ** {w!r} overflows")
    return result


def appendix_identity(m) -> complex:
    """Evaluate ``(-1)**(m+1/2) * (-i)**m * i**(-m-1)`` for half-integer ``m >= 1/2``.

    The product is 1 for every such ``m`` (up to rounding).
    """
    m = Fraction(m) if not isinstance(m, float) else Fraction(repr(m))
    if m.denominator != 2 or m < Fraction(1, 2):
        raise DomainError(f"m must be a half-integer >= 1/2, got {m}")
    mf = float(m)
    return cpow(-1, mf + 0.5) * cpow(-1j, mf) * cpow(1j, -mf - 1)
