# -*- coding: utf-8 -*-
"""Evaluate a SweepSpec point by point."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Tuple

from core.bounds import (
    asymptotic_capacity_large_nt,
    capacity_upper_bound,
    deterministic_capacity,
    new_scheme_large_kappa_approx,
    new_scheme_lower_bound,
    new_scheme_upper_bound,
)
from core.channel import ChannelConfig, derive_seed, rician_weighted, scaled_identity
from core.errors import CapacityLabError
from core.estimate import CapacityEstimate
from core.estimators import MonteCarloSpec, mc_ergodic_capacity, mc_new_scheme_capacity, quadrature_capacity_m1
from core.special import QuadratureRule
from core.sweep.spec import SeriesSpec, SweepRow, SweepSpec

logger = logging.getLogger(__name__)

Evaluator = Callable[[ChannelConfig, MonteCarloSpec, QuadratureRule], CapacityEstimate]

EVALUATORS: Dict[str, Evaluator] = {
    "upper_bound": lambda cfg, mc, rule: capacity_upper_bound(cfg),
    "deterministic": lambda cfg, mc, rule: deterministic_capacity(cfg),
    "asymptotic": lambda cfg, mc, rule: asymptotic_capacity_large_nt(cfg.n_r, cfg.kappa, cfg.power),
    "mc_identity": lambda cfg, mc, rule: mc_ergodic_capacity(cfg, scaled_identity(cfg), mc),
    "mc_rician": lambda cfg, mc, rule: mc_ergodic_capacity(cfg, rician_weighted(cfg), mc),
    "quad_m1": lambda cfg, mc, rule: quadrature_capacity_m1(cfg, rule),
    "new_scheme_mc": lambda cfg, mc, rule: mc_new_scheme_capacity(cfg, mc),
    "new_scheme_ub": lambda cfg, mc, rule: new_scheme_upper_bound(cfg),
    "new_scheme_lb": lambda cfg, mc, rule: new_scheme_lower_bound(cfg, rule),
    "new_scheme_approx": lambda cfg, mc, rule: new_scheme_large_kappa_approx(cfg),
}


def _evaluate_point(spec: SweepSpec, curve: SeriesSpec, index: int) -> SweepRow:
    value = spec.grid[index]
    cfg = spec.point(curve, value)
    # one seed per grid index: every series shares draws at the same point
    mc = spec.mc.with_seed(derive_seed(spec.mc.seed, index))
    results: Dict[str, Tuple[float, float]] = {}
    errors: Dict[str, str] = {}
    for method in spec.methods:
        try:
            results[method] = EVALUATORS[method](cfg, mc, spec.rule).in_units(spec.units)
        except (CapacityLabError, ArithmeticError) as exc:
            label = f" [{curve.label}]" if curve.label else ""
            logger.warning("%s=%g%s: %s failed: %s", spec.variable, value, label, method, exc)
            errors[method] = str(exc)
    return SweepRow(
        series=curve.label,
        variable=spec.variable,
        value=value,
        methods=spec.methods,
        results=results,
        errors=errors,
        units=spec.units,
    )


def run_sweep(spec: SweepSpec, *, workers: int = 1) -> List[SweepRow]:
    """Rows in (series, grid) order; failing cells are recorded, never dropped."""
    jobs = [(curve, i) for curve in spec.curves() for i in range(len(spec.grid))]
    logger.info("sweep %s: %d points x %d methods", spec.variable, len(jobs), len(spec.methods))
    if workers <= 1:
        return [_evaluate_point(spec, curve, i) for curve, i in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: _evaluate_point(spec, *job), jobs))
