# -*- coding: utf-8 -*-
"""Capacity estimators: Monte Carlo for any configuration, quadrature for m = 1."""

from core.estimators.montecarlo import (
    MonteCarloSpec,
    NewSchemeMoments,
    mc_ergodic_capacity,
    mc_new_scheme_capacity,
    mc_new_scheme_moments,
)
from core.estimators.wishart import (
    EigenFitReport,
    ScalarWishartDensity,
    empirical_eigen_check,
    quadrature_capacity_m1,
    sample_scalar_wishart,
    scalar_wishart_cdf,
    scalar_wishart_pdf,
)

__all__ = [
    "EigenFitReport",
    "MonteCarloSpec",
    "NewSchemeMoments",
    "ScalarWishartDensity",
    "empirical_eigen_check",
    "mc_ergodic_capacity",
    "mc_new_scheme_capacity",
    "mc_new_scheme_moments",
    "quadrature_capacity_m1",
    "sample_scalar_wishart",
    "scalar_wishart_cdf",
    "scalar_wishart_pdf",
]
