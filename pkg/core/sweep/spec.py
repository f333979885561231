# -*- coding: utf-8 -*-
"""Declarative parameter sweeps.

A sweep varies one channel field over a grid and evaluates a list of
methods at every point, optionally for several labelled series (curves)
that differ in their fixed channel fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Tuple

import numpy as np

from core.channel import ChannelConfig, db_to_linear
from core.errors import CapacityLabError, SweepValidationError
from core.estimate import NATS, UNITS
from core.estimators import MonteCarloSpec
from core.special import QuadratureRule, default_rule

KAPPA = "kappa"
N_T = "n_t"
N_R = "n_r"
POWER_DB = "power_db"
VARIABLES = (KAPPA, N_T, N_R, POWER_DB)
INTEGER_VARIABLES = (N_T, N_R)


def _any(cfg: ChannelConfig) -> bool:
    return True


def _rank_one(cfg: ChannelConfig) -> bool:
    return cfg.m == 1


def _single_receiver(cfg: ChannelConfig) -> bool:
    return cfg.n_r == 1


# method name -> (point requirement, description of the requirement)
METHOD_REQUIREMENTS: Dict[str, Tuple[Callable[[ChannelConfig], bool], str]] = {
    "upper_bound": (_any, ""),
    "deterministic": (_any, ""),
    "asymptotic": (_any, ""),
    "mc_identity": (_any, ""),
    "mc_rician": (_any, ""),
    "quad_m1": (_rank_one, "min(n_t, n_r) = 1"),
    "new_scheme_mc": (_single_receiver, "n_r = 1"),
    "new_scheme_ub": (_single_receiver, "n_r = 1"),
    "new_scheme_lb": (_single_receiver, "n_r = 1"),
    "new_scheme_approx": (_single_receiver, "n_r = 1"),
}
METHODS = tuple(METHOD_REQUIREMENTS)


def grid_from_range(start: float, stop: float, steps: int) -> Tuple[float, ...]:
    """``steps`` evenly spaced values from start to stop inclusive."""
    steps = int(steps)
    if steps < 1:
        raise SweepValidationError(f"STEPS must be >= 1, got {steps}")
    if steps == 1:
        return (float(start),)
    return tuple(float(v) for v in np.linspace(float(start), float(stop), steps))


def apply_variable(base: ChannelConfig, variable: str, value: float) -> ChannelConfig:
    if variable == KAPPA:
        return base.with_(kappa=value)
    if variable == N_T:
        return base.with_(n_t=int(value))
    if variable == N_R:
        return base.with_(n_r=int(value))
    if variable == POWER_DB:
        return base.with_(power=db_to_linear(value))
    raise SweepValidationError(f"unknown sweep variable {variable!r}, expected one of {VARIABLES}")


@dataclass(frozen=True)
class SeriesSpec:
    """One curve: a label and the channel fields it fixes."""

    label: str
    base: ChannelConfig


@dataclass(frozen=True, eq=False)
class SweepSpec:
    variable: str
    grid: Tuple[float, ...]
    fixed: ChannelConfig
    methods: Tuple[str, ...]
    mc: MonteCarloSpec = field(default_factory=MonteCarloSpec)
    units: str = NATS
    rule: QuadratureRule = field(default_factory=default_rule)
    series: Tuple[SeriesSpec, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "grid", tuple(float(v) for v in self.grid))
        object.__setattr__(self, "methods", tuple(self.methods))
        object.__setattr__(self, "series", tuple(self.series))
        validate_sweep(self)

    @property
    def multi_series(self) -> bool:
        return bool(self.series)

    def curves(self) -> Tuple[SeriesSpec, ...]:
        return self.series or (SeriesSpec("", self.fixed),)

    def point(self, curve: SeriesSpec, value: float) -> ChannelConfig:
        return apply_variable(curve.base, self.variable, value)


def _check_grid(variable: str, grid: Iterable[float]) -> None:
    values = list(grid)
    if not values:
        raise SweepValidationError("sweep grid is empty")
    if any(not math.isfinite(v) for v in values):
        raise SweepValidationError(f"sweep grid has non-finite values: {values}")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise SweepValidationError(f"sweep grid must be strictly increasing: {values}")
    if variable in INTEGER_VARIABLES and any(v != int(v) for v in values):
        raise SweepValidationError(f"{variable} grid must hold integers: {values}")


def validate_sweep(spec: SweepSpec) -> None:
    if spec.variable not in VARIABLES:
        raise SweepValidationError(f"unknown sweep variable {spec.variable!r}, expected one of {VARIABLES}")
    _check_grid(spec.variable, spec.grid)
    if not spec.methods:
        raise SweepValidationError("no methods requested")
    unknown = [m for m in spec.methods if m not in METHOD_REQUIREMENTS]
    if unknown:
        raise SweepValidationError(f"unknown methods {unknown}, expected any of {list(METHODS)}")
    if len(set(spec.methods)) != len(spec.methods):
        raise SweepValidationError(f"duplicate methods in {list(spec.methods)}")
    if spec.units not in UNITS:
        raise SweepValidationError(f"unknown units {spec.units!r}, expected one of {UNITS}")
    labels = [s.label for s in spec.series]
    if any(not label for label in labels) or len(set(labels)) != len(labels):
        raise SweepValidationError(f"series labels must be non-empty and unique: {labels}")

    for curve in spec.curves():
        for value in spec.grid:
            try:
                cfg = spec.point(curve, value)
            except CapacityLabError as exc:
                where = f" (series {curve.label})" if curve.label else ""
                raise SweepValidationError(f"{spec.variable}={value:g}{where}: {exc}") from exc
            for method in spec.methods:
                check, needs = METHOD_REQUIREMENTS[method]
                if not check(cfg):
                    raise SweepValidationError(
                        f"method {method} needs {needs} but {spec.variable}={value:g} gives "
                        f"n_t={cfg.n_t}, n_r={cfg.n_r}"
                    )


@dataclass(frozen=True)
class SweepRow:
    """One grid point of one series; results are (capacity, uncertainty) in ``units``."""

    series: str
    variable: str
    value: float
    methods: Tuple[str, ...]
    results: Dict[str, Tuple[float, float]]
    errors: Dict[str, str]
    units: str = NATS

    @property
    def ok(self) -> bool:
        return not self.errors
