# -*- coding: utf-8 -*-
"""Closed-form capacity expressions (all in nats).

- Jensen upper bound with the water-filled diagonal allocation
- deterministic (κ → ∞) capacity and the all-LOS covariance check
- large-N_T asymptote
- bounds and the large-κ approximation for the Rician-weighted covariance
  at a single receive antenna
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from core.channel import ChannelConfig, awgn_covariance
from core.errors import DomainError, UnsupportedConfigurationError
from core.estimate import QUADRATURE, CapacityEstimate
from core.linalg import ComplexMatrix, HermitianMatrix, all_ones, logdet_posdef
from core.special import QuadratureRule, default_rule, integrate_semiinfinite, log_bessel_i

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WaterfillAllocation:
    """Diagonal of the water-filled Q̃ and the water-level comparison θ."""

    diagonal: Tuple[float, ...]
    threshold: float

    def __post_init__(self) -> None:
        diag = tuple(float(v) for v in self.diagonal)
        if not diag:
            raise DomainError("allocation needs at least one entry")
        if any(v < 0 for v in diag):
            raise DomainError(f"allocation entries must be >= 0: {diag}")
        if len(set(diag[1:])) > 1:
            raise DomainError(f"entries after the first must be equal: {diag}")
        object.__setattr__(self, "diagonal", diag)

    @property
    def total(self) -> float:
        return float(math.fsum(self.diagonal))


def _positive_part(x: float) -> float:
    return x if x > 0.0 else 0.0


def _upsilon_eigenvalues(cfg: ChannelConfig) -> Tuple[float, float]:
    """Largest and repeated eigenvalue of Υ."""
    return (1.0 + cfg.n_t * cfg.kappa) / (1.0 + cfg.kappa), 1.0 / (1.0 + cfg.kappa)


def _require_single_receiver(cfg: ChannelConfig, what: str) -> None:
    if cfg.n_r != 1:
        raise UnsupportedConfigurationError(f"{what} is defined for n_r = 1 only (got n_r={cfg.n_r})")


def waterfill_allocation(cfg: ChannelConfig) -> WaterfillAllocation:
    """Water-filling over the eigenvalues of Υ.

    θ = κ(1+κ)/(N_R(1+N_Tκ)); the weak modes get [P/N_T − θ]⁺ each and the
    mean direction takes the rest, so the first entry is
    N_T·min{P/N_T, θ} + [P/N_T − θ]⁺.
    """
    theta = cfg.kappa * (1.0 + cfg.kappa) / (cfg.n_r * (1.0 + cfg.n_t * cfg.kappa))
    share = cfg.power / cfg.n_t
    rest = _positive_part(share - theta)
    # written as P minus the weak modes so that N_T = 1 gives exactly P
    first = cfg.power - (cfg.n_t - 1) * rest
    return WaterfillAllocation(diagonal=(first,) + (rest,) * (cfg.n_t - 1), threshold=theta)


def capacity_upper_bound(cfg: ChannelConfig) -> CapacityEstimate:
    """Jensen bound log det(I + N_R·Q̃·D) with the water-filled Q̃."""
    alloc = waterfill_allocation(cfg)
    lam_1, lam_rest = _upsilon_eigenvalues(cfg)
    value = math.log1p(cfg.n_r * lam_1 * alloc.diagonal[0])
    if cfg.n_t > 1 and alloc.diagonal[1] > 0.0:
        value += (cfg.n_t - 1) * math.log1p(cfg.n_r * lam_rest * alloc.diagonal[1])
    return CapacityEstimate.closed_form(value)


def deterministic_capacity(cfg: ChannelConfig) -> CapacityEstimate:
    """ln(1 + N_R·N_T·P), the exact capacity of the all-LOS channel (κ ignored)."""
    return CapacityEstimate.closed_form(math.log1p(cfg.n_r * cfg.n_t * cfg.power))


def los_channel(cfg: ChannelConfig) -> ComplexMatrix:
    """H̄ = (1+j)/√2·Ψ, the κ → ∞ channel."""
    return ComplexMatrix(all_ones(cfg.n_r, cfg.n_t).entries * ((1.0 + 1.0j) / math.sqrt(2.0)))


def awgn_covariance_capacity(cfg: ChannelConfig) -> CapacityEstimate:
    """log det(I + H̄·Q^∞·H̄ᴴ) evaluated by matrix algebra; matches deterministic_capacity."""
    h_bar = los_channel(cfg).entries
    q = awgn_covariance(cfg).matrix.entries
    product = HermitianMatrix(np.eye(cfg.n_r) + h_bar @ q @ h_bar.conj().T)
    return CapacityEstimate.closed_form(logdet_posdef(product))


def asymptotic_capacity_large_nt(n_r: int, kappa: float, power: float) -> CapacityEstimate:
    """N_T → ∞ capacity with Q⁰: (N_R−1)·ln(1 + P/(1+κ)) + ln(1 + (N_Rκ+1)·P/(1+κ))."""
    cfg = ChannelConfig(n_t=1, n_r=n_r, kappa=kappa, power=power)
    scaled = cfg.power / (1.0 + cfg.kappa)
    value = (cfg.n_r - 1) * math.log1p(scaled) + math.log1p((cfg.n_r * cfg.kappa + 1.0) * scaled)
    return CapacityEstimate.closed_form(value)


def new_scheme_upper_bound(cfg: ChannelConfig) -> CapacityEstimate:
    """Jensen bound for Q^κ at N_R = 1: ln(1 + tr(Q^κ·Υ))."""
    _require_single_receiver(cfg, "new_scheme_upper_bound")
    k = cfg.kappa
    gain = 1.0 + k / (1.0 + k) + cfg.n_t * k * k / (1.0 + k)
    return CapacityEstimate.closed_form(math.log1p(cfg.power / (1.0 + k) * gain))


def _lower_bound_integrand(cfg: ChannelConfig):
    # x = (1+κ)z; the density of x is e^{-x-a}·I₀(2√(a x)) with a = N_Tκ
    a = cfg.n_t * cfg.kappa
    slope = cfg.power * cfg.kappa / (1.0 + cfg.kappa) ** 2

    def f(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        log_term = np.log1p(slope * x)
        log_density = np.asarray(log_bessel_i(0, 2.0 * np.sqrt(a * x))) - a - x
        return log_term * np.exp(log_density)

    return f, (a + 1.0, math.sqrt(1.0 + 2.0 * a))


def new_scheme_lower_bound(cfg: ChannelConfig, rule: Optional[QuadratureRule] = None) -> CapacityEstimate:
    """E ln(1 + Pκ·z/(1+κ)) with z = |Z|²/N_T, dropping W from the Q^κ capacity.

    Evaluated by quadrature; the uncertainty is the quadrature error estimate.
    """
    _require_single_receiver(cfg, "new_scheme_lower_bound")
    if cfg.kappa == 0.0 or cfg.power == 0.0:
        return CapacityEstimate(nats=0.0, uncertainty=0.0, method=QUADRATURE)
    f, scale = _lower_bound_integrand(cfg)
    value, err = integrate_semiinfinite(f, rule or default_rule(), scale=scale)
    logger.debug("new-scheme lower bound n_t=%d kappa=%g: %.9g (err %.2e)", cfg.n_t, cfg.kappa, value, err)
    return CapacityEstimate(nats=value, uncertainty=err, method=QUADRATURE)


def new_scheme_large_kappa_approx(cfg: ChannelConfig) -> CapacityEstimate:
    """ln(1 + P·N_T·κ²/(1+κ)²), the large-κ form of the Q^κ upper bound."""
    _require_single_receiver(cfg, "new_scheme_large_kappa_approx")
    ratio = cfg.kappa / (1.0 + cfg.kappa)
    return CapacityEstimate.closed_form(math.log1p(cfg.power * cfg.n_t * ratio * ratio))


def bound_report(cfg: ChannelConfig, rule: Optional[QuadratureRule] = None) -> Dict[str, CapacityEstimate]:
    """Every closed form that applies to ``cfg``, keyed by sweep method name."""
    report: Dict[str, CapacityEstimate] = {
        "upper_bound": capacity_upper_bound(cfg),
        "deterministic": deterministic_capacity(cfg),
        "asymptotic": asymptotic_capacity_large_nt(cfg.n_r, cfg.kappa, cfg.power),
    }
    if cfg.n_r == 1:
        report["new_scheme_ub"] = new_scheme_upper_bound(cfg)
        report["new_scheme_lb"] = new_scheme_lower_bound(cfg, rule)
        report["new_scheme_approx"] = new_scheme_large_kappa_approx(cfg)
    return report


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
