# -*- coding: utf-8 -*-
"""Closed-form capacity bounds."""

from core.bounds.closed_form import (
    WaterfillAllocation,
    asymptotic_capacity_large_nt,
    awgn_covariance_capacity,
    bound_report,
    capacity_upper_bound,
    deterministic_capacity,
    los_channel,
    new_scheme_large_kappa_approx,
    new_scheme_lower_bound,
    new_scheme_upper_bound,
    waterfill_allocation,
)

__all__ = [
    "WaterfillAllocation",
    "asymptotic_capacity_large_nt",
    "awgn_covariance_capacity",
    "bound_report",
    "capacity_upper_bound",
    "deterministic_capacity",
    "los_channel",
    "new_scheme_large_kappa_approx",
    "new_scheme_lower_bound",
    "new_scheme_upper_bound",
    "waterfill_allocation",
]
