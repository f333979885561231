# -*- coding: utf-8 -*-
"""Build SweepSpecs from ini files.

Layout of a sweep (or figure preset) file:

    [SWEEP]
    VARIABLE = n_t            # kappa | n_t | n_r | power_db
    GRID = 1, 2, 4, 8         # or START / STOP / STEPS
    METHODS = quad_m1, upper_bound
    UNITS = nats              # optional

    [CHANNEL]
    N_T = 1
    N_R = 1
    KAPPA = 10
    SNR_DB = 10

    [MONTE_CARLO]             # optional, falls back to conf/settings.ini
    SAMPLES = 50000

    [QUADRATURE]              # optional, same keys as conf/settings.ini
    GL_ORDER = 96

    [OUTPUT]                  # optional; [SWEEP] UNITS wins over it
    UNITS = bits

    [SERIES rayleigh]         # optional curves, override CHANNEL keys
    KAPPA = 0

Precedence: explicit overrides (command-line flags) > this file >
conf/settings.ini > built-in defaults.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from core.channel import ChannelConfig, db_to_linear
from core.config import PROJECT_ROOT, ConfigLoader
from core.errors import CapacityLabError, SweepValidationError
from core.estimate import NATS
from core.estimators import MonteCarloSpec
from core.estimators.montecarlo import DEFAULT_CONFIDENCE, DEFAULT_SAMPLES, DEFAULT_SEED
from core.special import QuadratureRule, default_rule
from core.special.quadrature import DEFAULT_FALLBACK_TOLERANCE, DEFAULT_GL_ORDER, GAUSS_LAGUERRE
from core.sweep.spec import N_R, N_T, KAPPA, POWER_DB, SeriesSpec, SweepSpec, grid_from_range

logger = logging.getLogger(__name__)

FIGURES_DIR = PROJECT_ROOT / "conf" / "figures"
FIGURE_NUMBERS = tuple(range(1, 10))
SERIES_PREFIX = "SERIES "

# ini key -> channel field, for [CHANNEL] and [SERIES ...]
_CHANNEL_KEYS = {"N_T": N_T, "N_R": N_R, "KAPPA": KAPPA, "SNR_DB": POWER_DB}
# the swept field must not be overridden at a fixed value
_VARIABLE_OVERRIDE = {N_T: N_T, N_R: N_R, KAPPA: KAPPA, POWER_DB: "snr_db"}


@dataclass(frozen=True, eq=False)
class RunDefaults:
    """Monte Carlo, quadrature and unit defaults resolved from settings."""

    mc: MonteCarloSpec = field(default_factory=MonteCarloSpec)
    rule: QuadratureRule = field(default_factory=default_rule)
    units: str = NATS

    @classmethod
    def from_settings(cls, loader: Optional[ConfigLoader]) -> "RunDefaults":
        if loader is None:
            return cls()
        return cls(
            mc=mc_spec_from(loader, MonteCarloSpec(DEFAULT_SAMPLES, DEFAULT_SEED, 1, DEFAULT_CONFIDENCE)),
            rule=rule_from(loader, default_rule()),
            units=units_from(loader, NATS),
        )

    def with_overrides(self, *, samples=None, seed=None, shards=None, units=None) -> "RunDefaults":
        mc = self.mc
        if samples is not None or seed is not None or shards is not None:
            mc = _build_mc(
                samples if samples is not None else mc.samples,
                seed if seed is not None else mc.seed,
                shards if shards is not None else mc.shards,
                mc.confidence,
            )
        return replace(self, mc=mc, units=units or self.units)


def _build_mc(samples: int, seed: int, shards: int, confidence: float) -> MonteCarloSpec:
    # a small sample count with the default shard count still has to validate
    return MonteCarloSpec(samples=samples, seed=seed, shards=min(shards, samples), confidence=confidence)


def mc_spec_from(loader: ConfigLoader, base: MonteCarloSpec) -> MonteCarloSpec:
    """[MONTE_CARLO] section on top of ``base``."""
    try:
        return _build_mc(
            loader.get_int("MONTE_CARLO", "SAMPLES", base.samples),
            loader.get_int("MONTE_CARLO", "SEED", base.seed),
            loader.get_int("MONTE_CARLO", "SHARDS", base.shards),
            loader.get_float("MONTE_CARLO", "CONFIDENCE", base.confidence),
        )
    except (ValueError, CapacityLabError) as exc:
        raise SweepValidationError(f"{loader.config_path}: [MONTE_CARLO] {exc}") from exc


def rule_from(loader: ConfigLoader, base: QuadratureRule) -> QuadratureRule:
    """[QUADRATURE] section on top of ``base``; an absent section keeps ``base``."""
    if not any(loader.has("QUADRATURE", key) for key in ("GL_ORDER", "FALLBACK_TOLERANCE", "ADAPTIVE_TOLERANCE")):
        return base
    order = base.order if base.kind == GAUSS_LAGUERRE else DEFAULT_GL_ORDER
    fallback = base.fallback_tolerance if base.fallback_tolerance is not None else DEFAULT_FALLBACK_TOLERANCE
    try:
        return default_rule(
            loader.get_int("QUADRATURE", "GL_ORDER", order),
            loader.get_float("QUADRATURE", "FALLBACK_TOLERANCE", fallback),
            loader.get_float("QUADRATURE", "ADAPTIVE_TOLERANCE", base.tolerance),
        )
    except (ValueError, CapacityLabError) as exc:
        raise SweepValidationError(f"{loader.config_path}: [QUADRATURE] {exc}") from exc


def units_from(loader: ConfigLoader, base: str) -> str:
    """[OUTPUT] UNITS, falling back to ``base``."""
    return (loader.get("OUTPUT", "UNITS") or base).lower()


def figure_preset_path(number: int) -> Path:
    if int(number) not in FIGURE_NUMBERS:
        raise SweepValidationError(f"no figure preset {number}; available: {list(FIGURE_NUMBERS)}")
    return FIGURES_DIR / f"figure{int(number)}.ini"


def _channel_fields(loader: ConfigLoader, section: str) -> Dict[str, float]:
    fields: Dict[str, float] = {}
    for key, name in _CHANNEL_KEYS.items():
        val = loader.get_float(section, key)
        if val is not None:
            fields[name] = val
    return fields


def _to_config(fields: Dict[str, float], where: str) -> ChannelConfig:
    missing = [k for k in (N_T, N_R, KAPPA, POWER_DB) if k not in fields]
    if missing:
        raise SweepValidationError(f"{where}: missing channel keys {missing}")
    try:
        return ChannelConfig(
            n_t=fields[N_T],
            n_r=fields[N_R],
            kappa=fields[KAPPA],
            power=db_to_linear(fields[POWER_DB]),
        )
    except CapacityLabError as exc:
        raise SweepValidationError(f"{where}: {exc}") from exc


def _grid(loader: ConfigLoader) -> Sequence[float]:
    if loader.has("SWEEP", "GRID"):
        return [float(v) for v in loader.get_list("SWEEP", "GRID")]
    start = loader.get_float("SWEEP", "START")
    stop = loader.get_float("SWEEP", "STOP")
    steps = loader.get_int("SWEEP", "STEPS")
    if start is None or stop is None or steps is None:
        raise SweepValidationError(f"{loader.config_path}: [SWEEP] needs GRID or START/STOP/STEPS")
    return grid_from_range(start, stop, steps)


def load_sweep(
    path,
    *,
    defaults: Optional[RunDefaults] = None,
    channel_overrides: Optional[Dict[str, float]] = None,
    mc_overrides: Optional[Dict[str, int]] = None,
    methods: Optional[List[str]] = None,
    units: Optional[str] = None,
) -> SweepSpec:
    """Read a sweep file into a validated SweepSpec.

    ``channel_overrides`` uses field names n_t, n_r, kappa, snr_db and wins
    over both [CHANNEL] and [SERIES ...] values.
    """
    try:
        loader = ConfigLoader(path)
    except FileNotFoundError as exc:
        raise SweepValidationError(str(exc)) from exc
    defaults = defaults or RunDefaults()
    where = str(loader.config_path)
    if "SWEEP" not in loader.sections():
        raise SweepValidationError(f"{where}: missing [SWEEP] section")

    try:
        variable = (loader.get("SWEEP", "VARIABLE") or "").lower()
        grid = _grid(loader)
        channel = _channel_fields(loader, "CHANNEL")
        series_fields = {
            name[len(SERIES_PREFIX):].strip(): _channel_fields(loader, name)
            for name in loader.sections()
            if name.startswith(SERIES_PREFIX)
        }
    except ValueError as exc:
        raise SweepValidationError(f"{where}: {exc}") from exc
    if not grid:
        raise SweepValidationError(f"{where}: sweep grid is empty")

    overrides = {(POWER_DB if k == "snr_db" else k): float(v) for k, v in (channel_overrides or {}).items() if v is not None}
    if variable in overrides:
        logger.warning("ignoring --%s: it is the swept variable", _VARIABLE_OVERRIDE.get(variable, variable))
        overrides.pop(variable)

    def resolve(fields: Dict[str, float], label: str) -> ChannelConfig:
        merged = dict(fields)
        merged.update(overrides)
        # the swept field only needs a placeholder; every point replaces it
        merged.setdefault(variable, grid[0])
        return _to_config(merged, label)

    series = tuple(
        SeriesSpec(label, resolve({**channel, **fields}, f"{where} [SERIES {label}]"))
        for label, fields in series_fields.items()
    )
    # with series, [CHANNEL] only holds the keys they share
    fixed = series[0].base if series else resolve(channel, f"{where} [CHANNEL]")

    mc = mc_spec_from(loader, defaults.mc)
    if mc_overrides:
        picked = {
            key: mc_overrides[key] if mc_overrides.get(key) is not None else getattr(mc, key)
            for key in ("samples", "seed", "shards")
        }
        try:
            mc = _build_mc(picked["samples"], picked["seed"], picked["shards"], mc.confidence)
        except CapacityLabError as exc:
            raise SweepValidationError(f"{where}: Monte Carlo override {exc}") from exc

    file_units = loader.get("SWEEP", "UNITS") or units_from(loader, defaults.units)
    return SweepSpec(
        variable=variable,
        grid=tuple(grid),
        fixed=fixed,
        methods=tuple(methods or loader.get_list("SWEEP", "METHODS") or ()),
        mc=mc,
        units=(units or file_units).lower(),
        rule=rule_from(loader, defaults.rule),
        series=series,
    )
