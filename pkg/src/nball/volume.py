"""Ball volumes: closed form, distributional pipeline, and the l2(C) ball.

The distributional route writes the unit-ball volume as

    Vol(B^n) = pi^(n/2) * F^-1[ lim_{eps->0} (eps + ik)^(-n/2-1) ](x=1)

and evaluates it with :func:`~nball.distributions.eps_limit_inverse_power`
and :func:`~nball.distributions.inverse_ft_eval` in exact arithmetic, so the
result can be compared to ``pi^(n/2) / Gamma(n/2 + 1)`` by equality.

For the ball in the space of square-summable complex sequences the
Gaussian integral over each coordinate contributes the same factor
``pi / (eps + ik)``; the infinite product of identical factors ``a`` is
assigned the value ``a ** zeta(0) = a ** (-1/2)``.
"""
from __future__ import annotations

import enum
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .branch import cpow
from .distributions import DistExpr, eps_limit_inverse_power, inverse_ft_eval
from .errors import DomainError, NotExact, UnsupportedExpression
from .exact import ExactComplex, ExactValue, as_fraction, exact_cpow
from .special import gamma, gamma_exact

__all__ = [
    "ZETA_ZERO",
    "Method",
    "VolumeReport",
    "ModeFactor",
    "InfiniteDimPipeline",
    "volume_closed_form",
    "volume_distributional",
    "zeta_regularized_product",
    "infinite_dim_pipeline",
    "volume_infinite_dim",
    "closed_form_report",
    "distributional_report",
    "infinite_dim_report",
]

#: Riemann zeta at 0, the regularized value of 1 + 1 + 1 + ...
ZETA_ZERO = Fraction(-1, 2)


class Method(str, enum.Enum):
    closed_form = "closed_form"
    distributional = "distributional"
    quadrature = "quadrature"
    monte_carlo = "monte_carlo"
    infinite_dim = "infinite_dim"


@dataclass
class VolumeReport:
    dimension: Union[int, float, Fraction]
    radius: float
    method: Method
    value: float
    exact: Optional[ExactValue] = None
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        self.method = Method(self.method)
        if self.exact is not None:
            ref = float(self.exact)
            if abs(self.value - ref) > 1e-12 * max(abs(ref), 1e-300):
                raise ValueError(f"value {self.value!r} disagrees with exact {self.exact}")
        if self.method is Method.monte_carlo:
            missing = {"stderr", "seed"} - self.diagnostics.keys()
            if missing:
                raise ValueError(f"monte carlo report lacks {sorted(missing)}")


def _radius(r) -> Optional[Fraction]:
    if r is None:
        return None
    q = as_fraction(r)
    if q <= 0:
        raise DomainError(f"radius must be positive, got {r}")
    return q


def _dimension(n) -> Fraction:
    try:
        q = as_fraction(n)
    except (NotExact, TypeError, ValueError):
        raise DomainError(f"dimension must be a finite real, got {n!r}") from None
    return q


def volume_closed_form(n, r=1) -> Union[ExactValue, float]:
    """``pi^(n/2) / Gamma(n/2 + 1) * r^n`` for real ``n > -2``.

    Exact for integer ``n >= -1``: ``n = 0`` gives 1 (a point) and ``n = -1``
    gives ``1/(pi r)``.  Other real ``n`` return a float.  ``r=None`` keeps the
    radius symbolic in the exact result.
    """
    q = _dimension(n)
    if q <= -2:
        raise DomainError(f"closed form needs n > -2, got {n}")
    rq = _radius(r)
    if q.denominator == 1:
        coeff, pi_g = (gamma_exact(q / 2 + 1)).as_real_monomial()
        value = ExactValue(1 / coeff, int(q) - pi_g, int(q))
        return value if rq is None else value.substitute(rq)
    if rq is None:
        raise DomainError("symbolic radius needs an integer dimension")
    nf = float(q)
    return math.pi ** (nf / 2) / gamma(q / 2 + 1) * float(rq) ** nf


def volume_distributional(n, r=1) -> ExactValue:
    """Unit-ball volume from the eps-limit and inverse Fourier transform, times ``r^n``."""
    q = _dimension(n)
    if q.denominator != 1 or q < 1:
        raise DomainError(f"distributional pipeline needs an integer n >= 1, got {n}")
    rq = _radius(r)
    expr = eps_limit_inverse_power(q / 2)
    inv = inverse_ft_eval(expr, 1, exact=True)
    total = ExactComplex.pi_power(int(q)) * inv
    value = ExactValue.from_exact(total, r_power=int(q))
    return value if rq is None else value.substitute(rq)


# --------------------------------------------------------------------------
# zeta regularization


def _exact_power(c: ExactComplex, e: Fraction) -> ExactComplex:
    """Principal ``c**e`` for a single monomial ``q * z**j * pi**(p/2)``."""
    monos = list(c.monomials())
    if len(monos) != 1:
        raise NotExact("only monomials have exact powers here")
    q, j, p = monos[0]
    if q < 0:
        j += 4
    if j >= 4:
        j -= 8
    if (p * e).denominator != 1:
        raise NotExact("pi power is not a half-integer")
    return exact_cpow(abs(q), j, e) * ExactComplex.pi_power(int(p * e))


def _scalar_power(a, e: Fraction):
    if isinstance(a, (int, Fraction)) or (isinstance(a, float) and a.is_integer()):
        a = ExactComplex.rational(a)
    if isinstance(a, ExactComplex):
        try:
            return _exact_power(a, e)
        except NotExact:
            a = complex(a)
    return cpow(a, float(e))


@dataclass(frozen=True)
class ModeFactor:
    """``scale * (eps + i k)**exponent`` as a function of ``k``."""

    scale: Union[ExactComplex, complex]
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", as_fraction(self.exponent))
        if not isinstance(self.scale, ExactComplex):
            try:
                object.__setattr__(self, "scale", ExactComplex.coerce(self.scale))
            except NotExact:
                object.__setattr__(self, "scale", complex(self.scale))

    def __mul__(self, other):
        if isinstance(other, ModeFactor):
            return ModeFactor(_times(self.scale, other.scale), self.exponent + other.exponent)
        return ModeFactor(_times(self.scale, other), self.exponent)

    __rmul__ = __mul__

    def __call__(self, eps: float, k: float) -> complex:
        return complex(self.scale) * cpow(complex(eps, k), float(self.exponent))

    def limit(self) -> DistExpr:
        """Distributional ``eps -> 0`` limit in ``k``."""
        m = -self.exponent - 1
        return eps_limit_inverse_power(m).scale(self.scale)


def _times(a, b):
    if isinstance(a, ExactComplex) and not isinstance(b, complex):
        return a * ExactComplex.coerce(b)
    if isinstance(b, ExactComplex) and not isinstance(a, complex):
        return ExactComplex.coerce(a) * b
    return complex(a) * complex(b)


def zeta_regularized_product(factor):
    """Regularized ``prod_{n>=1} factor`` for a constant factor: ``factor ** zeta(0)``.

    ``factor`` may be a number, a :class:`ModeFactor` or a sequence of equal
    factors.  For ``ModeFactor(pi, -1)``, i.e. ``pi / (eps + ik)``, the result
    is ``ModeFactor(pi**(-1/2), 1/2) = sqrt((eps + ik) / pi)``.
    """
    if isinstance(factor, Sequence) and not isinstance(factor, str):
        if not factor:
            raise UnsupportedExpression("empty factor sequence")
        first = factor[0]
        if any(f != first for f in factor[1:]):
            raise UnsupportedExpression("zeta regularization implemented for constant factors only")
        factor = first
    if isinstance(factor, ModeFactor):
        scale = factor.scale
        if isinstance(scale, ExactComplex):
            try:
                q, _ = scale.as_real_monomial()
            except NotExact:
                q = -1
        else:
            q = scale.real if scale.imag == 0 else -1
        if q <= 0:
            # (c w)^e = c^e w^e needs a positive real c
            raise UnsupportedExpression("mode factor scale must be positive real")
        return ModeFactor(_scalar_power(scale, ZETA_ZERO), factor.exponent * ZETA_ZERO)
    if isinstance(factor, complex) and factor.imag == 0:
        factor = factor.real
    if isinstance(factor, float):
        try:
            factor = as_fraction(factor)
        except NotExact:
            pass
    if isinstance(factor, (int, Fraction)) and factor == 0:
        raise DomainError("zero factor")
    return _scalar_power(factor, ZETA_ZERO)


@dataclass(frozen=True)
class InfiniteDimPipeline:
    """Intermediate quantities of the l2(C) ball computation at radius ``r``."""

    mode_factor: ModeFactor
    regularized_product: ModeFactor
    theta_kernel: ModeFactor
    prefactor: ExactComplex
    integrand: ModeFactor
    transform_scale: ExactComplex
    limit: DistExpr
    inverse_value: ExactComplex
    volume: ExactValue


def infinite_dim_pipeline(r=1) -> InfiniteDimPipeline:
    rq = _radius(r)
    x = Fraction(1) if rq is None else rq * rq
    pi = ExactComplex.pi_power(2)
    i = ExactComplex.zeta(2)

    mode = ModeFactor(pi, -1)  # integral over one complex coordinate: pi/(eps+ik)
    product = zeta_regularized_product(mode)
    kernel = ModeFactor(i, -1)  # 1/(k - i eps) = i/(eps + ik)
    prefactor = 1 / (ExactComplex.rational(2) * pi * i)
    integrand = kernel * product * prefactor
    # integral dk e^{ikx} f(k) = 2 pi F^-1 f (x)
    transform_scale = ExactComplex.rational(2) * pi * integrand.scale
    limit = ModeFactor(ExactComplex.rational(1), integrand.exponent).limit()
    inv = inverse_ft_eval(limit, x, exact=True)
    volume = ExactValue.from_exact(transform_scale * inv, r_power=-1 if rq is None else 0)
    return InfiniteDimPipeline(
        mode_factor=mode,
        regularized_product=product,
        theta_kernel=kernel,
        prefactor=prefactor,
        integrand=integrand,
        transform_scale=transform_scale,
        limit=limit,
        inverse_value=inv,
        volume=volume,
    )


def volume_infinite_dim(r=1) -> ExactValue:
    """Zeta-regularized volume of the radius-``r`` ball in l2(C); equals ``1/(pi r)``."""
    return infinite_dim_pipeline(r).volume


# --------------------------------------------------------------------------
# reports


def _float_radius(r) -> float:
    rq = _radius(r)
    if rq is None:
        raise DomainError("reports need a numeric radius")
    return float(rq)


def closed_form_report(n, r=1) -> VolumeReport:
    result = volume_closed_form(n, r)
    exact = result if isinstance(result, ExactValue) else None
    value = float(result)
    diagnostics = {"extension": "n=0 point-ball convention"} if _dimension(n) == 0 else {}
    return VolumeReport(n, _float_radius(r), Method.closed_form, value, exact, diagnostics)


def distributional_report(n, r=1) -> VolumeReport:
    exact = volume_distributional(n, r)
    m = _dimension(n) / 2
    diagnostics = {"m": str(m), "limit": str(eps_limit_inverse_power(m))}
    return VolumeReport(n, _float_radius(r), Method.distributional, float(exact), exact, diagnostics)


def infinite_dim_report(r=1) -> VolumeReport:
    steps = infinite_dim_pipeline(r)
    diagnostics = {
        "prefactor": str(steps.integrand.scale),
        "limit": str(steps.limit),
        "zeta0": str(ZETA_ZERO),
    }
    return VolumeReport(
        "infinity", _float_radius(r), Method.infinite_dim, float(steps.volume), steps.volume, diagnostics
    )
