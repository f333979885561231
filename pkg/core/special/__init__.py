# -*- coding: utf-8 -*-
"""Special functions and quadrature."""

from core.special.functions import (
    hyp0f1_scalar,
    hyp0f1_series,
    log_bessel_i,
    log_gamma,
    log_multivariate_gamma,
    log_psi_factor,
    psi_factor,
)
from core.special.quadrature import QuadratureRule, default_rule, integrate_semiinfinite

__all__ = [
    "QuadratureRule",
    "default_rule",
    "hyp0f1_scalar",
    "hyp0f1_series",
    "integrate_semiinfinite",
    "log_bessel_i",
    "log_gamma",
    "log_multivariate_gamma",
    "log_psi_factor",
    "psi_factor",
]
