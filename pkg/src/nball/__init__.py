"""Ball volumes through distributional Fourier transforms of power laws.

The package computes ``Vol(B^n(r)) = pi^(n/2) / Gamma(n/2 + 1) * r^n`` three
ways (closed form, an exact eps-limit / inverse-transform pipeline, and the
zeta-regularized ball in l2(C)) and checks them against quadrature and Monte
Carlo estimates.
"""
__version__ = "0.1.0"

from .branch import appendix_identity, close, cpow, principal_log
from .distributions import (
    DistExpr,
    DistTerm,
    eps_limit_inverse_power,
    evaluate,
    ft_generic,
    ft_half_integer,
    ft_numeric_oracle,
    ft_powerlaw,
    inverse_ft_eval,
)
from .errors import ConvergenceError, DomainError, NotExact, UnsupportedExpression
from .exact import ExactComplex, ExactValue
from .special import double_factorial, factorial, gamma, gamma_exact
from .verify import MonteCarloConfig, QuadratureConfig, volume_monte_carlo, volume_quadrature
from .volume import (
    ZETA_ZERO,
    VolumeReport,
    infinite_dim_pipeline,
    volume_closed_form,
    volume_distributional,
    volume_infinite_dim,
    zeta_regularized_product,
)
