"""Numerical oracles for the ball volume.

``volume_quadrature`` evaluates

    Vol(B^n) = pi^(n/2-1)/2 * integral exp(ik) / (eps + ik)^(n/2+1) dk

for a decreasing sequence of ``eps`` and extrapolates linearly to 0.  The
integrand peaks at ``eps^-(n/2+1)`` near ``k = 0`` while the integral is O(1),
so for large ``n`` direct quadrature loses every digit to cancellation.  We
first lower the exponent ``s`` by integration by parts on ``[-K, K]``::

    I_s = [exp(ik) (eps+ik)^(1-s) / (i(1-s))]_{-K}^{K} + I_{s-1} / (s-1)

down to ``s = 3/2`` (odd n) or ``s = 2`` (even n), which is an identity for
the truncated integral.  The base integral is computed with QUADPACK's
cosine/sine-weighted rule on panels doubling in length from ``eps`` to ``K``.

``volume_monte_carlo`` counts hits of uniform points in ``[-r, r]^n`` drawn
from per-shard Philox streams (counter based, so reproducible from the seed).
"""
from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy import integrate

from .branch import cpow
from .errors import ConvergenceError, DomainError
from .volume import Method, VolumeReport

__all__ = [
    "QuadratureConfig",
    "MonteCarloConfig",
    "tail_cutoff",
    "eps_integral",
    "volume_quadrature",
    "volume_monte_carlo",
]

_BATCH = 1 << 16


def tail_cutoff(n: int, abs_tol: float) -> float:
    """Smallest K with ``2 K^(-n/2) / (n/2) <= abs_tol``."""
    h = n / 2
    return (2 / (h * abs_tol)) ** (1 / h)


@dataclass(frozen=True)
class QuadratureConfig:
    epsilons: tuple = (1e-2, 1e-3, 1e-4)
    truncation: Optional[float] = None  # None: choose K from the tail bound
    abs_tol: float = 1e-8
    max_subdivisions: int = 200

    def __post_init__(self):
        eps = tuple(float(e) for e in self.epsilons)
        if not eps or any(e <= 0 for e in eps):
            raise DomainError("epsilons must be positive")
        if any(b >= a for a, b in zip(eps, eps[1:])):
            raise DomainError("epsilons must be strictly decreasing")
        if self.truncation is not None and self.truncation <= 0:
            raise DomainError("truncation must be positive")
        if self.abs_tol <= 0:
            raise DomainError("abs_tol must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")
        object.__setattr__(self, "epsilons", eps)

    def cutoff(self, n: int) -> float:
        return self.truncation if self.truncation is not None else tail_cutoff(n, self.abs_tol)


@dataclass(frozen=True)
class MonteCarloConfig:
    samples: int = 1_000_000
    seed: int = 20240917
    shards: int = 1

    def __post_init__(self):
        if self.samples < 1:
            raise DomainError("samples must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")
        if self.shards < 1:
            raise DomainError("shards must be >= 1")


# --------------------------------------------------------------------------
# quadrature


def _panels(eps: float, K: float) -> list:
    edges = [0.0]
    e = eps
    while e < K:
        edges.append(e)
        e *= 2
    edges.append(K)
    return list(zip(edges[:-1], edges[1:]))


def _base_integral(s: Fraction, eps: float, K: float, cfg: QuadratureConfig):
    """``integral_{-K}^{K} exp(ik) (eps+ik)^(-s) dk`` and summed error estimate."""
    sf = -float(s)
    panels = _panels(eps, K)
    # budget per QUADPACK call; 4 weighted integrals, 2 sides, all panels
    tol = cfg.abs_tol / (8 * len(panels))
    total = 0j
    err = 0.0
    messages = []
    for side in (1, -1):

        def g_re(k, side=side):
            return cpow(complex(eps, side * k), sf).real

        def g_im(k, side=side):
            return cpow(complex(eps, side * k), sf).imag

        for a, b in panels:
            vals = []
            for f, w in ((g_re, "cos"), (g_im, "sin"), (g_im, "cos"), (g_re, "sin")):
                out = integrate.quad(
                    f, a, b, weight=w, wvar=1.0, epsabs=tol, epsrel=1e-12,
                    limit=cfg.max_subdivisions, full_output=1,
                )
                val, e = out[0], out[1]
                if len(out) > 3:
                    messages.append((a, b, " ".join(out[3].split()).split(".")[0]))
                vals.append(val)
                err += e
            c_re, s_im, c_im, s_re = vals
            # exp(i side k) = cos k + i side sin k
            total += complex(c_re - side * s_im, c_im + side * s_re)
    return total, err, messages


def eps_integral(n: int, eps: float, config: Optional[QuadratureConfig] = None):
    """Truncated ``integral exp(ik) / (eps+ik)^(n/2+1) dk`` and its error estimate."""
    cfg = config or QuadratureConfig()
    K = cfg.cutoff(n)
    s = Fraction(n, 2) + 1
    base = Fraction(3, 2) if n % 2 else Fraction(2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err, messages = _base_integral(base, eps, K, cfg)

    def boundary(t: Fraction, k: float) -> complex:
        return complex(math.cos(k), math.sin(k)) * cpow(complex(eps, k), float(1 - t)) / (1j * float(1 - t))

    t = base + 1
    while t <= s:
        value = boundary(t, K) - boundary(t, -K) + value / float(t - 1)
        err /= float(t - 1)
        t += 1
    if messages or err > cfg.abs_tol:
        detail = messages[0][2] if messages else f"error estimate {err:.3g} > abs_tol {cfg.abs_tol:.3g}"
        raise ConvergenceError(
            f"eps={eps}, n={n}: {detail}",
            best=value,
            diagnostics={"eps": eps, "error_estimate": err, "failed_panels": len(messages)},
        )
    return value, err


def volume_quadrature(n: int, config: Optional[QuadratureConfig] = None, jobs: int = 1) -> VolumeReport:
    """Unit-ball volume from the eps-regularized oscillatory integral."""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"quadrature needs an integer n >= 1, got {n}")
    n = int(n)
    cfg = config or QuadratureConfig()
    pref = math.pi ** (n / 2 - 1) / 2

    def one(eps):
        try:
            return eps_integral(n, eps, cfg)
        except ConvergenceError as exc:
            best = None if exc.best is None else pref * exc.best.real
            raise ConvergenceError(str(exc), best=best, diagnostics=exc.diagnostics) from exc

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(one, cfg.epsilons))
    else:
        results = [one(e) for e in cfg.epsilons]

    per_eps = []
    for eps, (val, err) in zip(cfg.epsilons, results):
        per_eps.append(
            {
                "eps": eps,
                "value": pref * val.real,
                "integral_real": val.real,
                "integral_imag": val.imag,
                "error_estimate": err,
            }
        )
    if len(per_eps) == 1:
        estimate = per_eps[0]["value"]
    else:
        (e1, v1), (e2, v2) = [(p["eps"], p["value"]) for p in per_eps[-2:]]
        estimate = (e1 * v2 - e2 * v1) / (e1 - e2)
    diagnostics = {
        "epsilons": list(cfg.epsilons),
        "truncation": cfg.cutoff(n),
        "abs_tol": cfg.abs_tol,
        "per_eps": per_eps,
        "extrapolation": "linear" if len(per_eps) > 1 else "none",
    }
    return VolumeReport(n, 1.0, Method.quadrature, estimate, None, diagnostics)


# --------------------------------------------------------------------------
# Monte Carlo


def _shard_sizes(samples: int, shards: int) -> list:
    base, extra = divmod(samples, shards)
    return [base + (i < extra) for i in range(shards)]


def _count_hits(n: int, count: int, seed_seq: np.random.SeedSequence) -> int:
    rng = np.random.Generator(np.random.Philox(seed_seq))
    hits = 0
    left = count
    while left:
        m = min(left, _BATCH)
        pts = rng.uniform(-1.0, 1.0, size=(m, n))
        hits += int(np.count_nonzero(np.einsum("ij,ij->i", pts, pts) <= 1.0))
        left -= m
    return hits


def volume_monte_carlo(n: int, r=1.0, config: Optional[MonteCarloConfig] = None, jobs: int = 1) -> VolumeReport:
    """Hit-or-miss estimate of the radius-``r`` ball volume in the cube ``[-r, r]^n``."""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"Monte Carlo needs an integer n >= 1, got {n}")
    n = int(n)
    r = float(r)
    if not r > 0 or not math.isfinite(r):
        raise DomainError(f"radius must be positive, got {r}")
    cfg = config or MonteCarloConfig()
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.shards)
    sizes = _shard_sizes(cfg.samples, cfg.shards)
    if jobs > 1 and cfg.shards > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            counts = list(pool.map(lambda a: _count_hits(n, *a), zip(sizes, children)))
    else:
        counts = [_count_hits(n, size, child) for size, child in zip(sizes, children)]
    hits = sum(counts)
    p = hits / cfg.samples
    cube = (2 * r) ** n
    diagnostics = {
        "samples": cfg.samples,
        "seed": cfg.seed,
        "shards": cfg.shards,
        "hits": hits,
        "stderr": cube * math.sqrt(p * (1 - p) / cfg.samples),
    }
    return VolumeReport(n, r, Method.monte_carlo, cube * p, None, diagnostics)
