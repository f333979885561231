# -*- coding: utf-8 -*-
"""Scalar (m = 1) non-central Wishart law and the exact m = 1 capacity.

When min(N_T, N_R) = 1 the only eigenvalue of the Gram matrix is
W = Σ|h_i|² over n = max(N_T, N_R) i.i.d. Rician entries, with density

    w^{n-1} e^{-w} ψ(w, n) / Γ(n)

so the ergodic capacity is a one-dimensional integral against it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple, Union

import numpy as np
from scipy import integrate, special, stats

from core.channel import ChannelConfig, RngStream, sample_h_batch
from core.errors import DomainError, UnsupportedConfigurationError
from core.estimate import QUADRATURE, CapacityEstimate
from core.estimators.montecarlo import CHUNK, MonteCarloSpec, collect_sharded
from core.special import QuadratureRule, default_rule, integrate_semiinfinite, log_psi_factor

logger = logging.getLogger(__name__)

CDF_GRID_POINTS = 20001
CDF_SPAN_STD = 14.0


@dataclass(frozen=True)
class ScalarWishartDensity:
    n: int
    kappa: float

    def __post_init__(self) -> None:
        if int(self.n) != self.n or int(self.n) < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if not (math.isfinite(float(self.kappa)) and self.kappa >= 0):
            raise DomainError(f"kappa must be finite and >= 0, got {self.kappa!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "kappa", float(self.kappa))

    @property
    def mean(self) -> float:
        return float(self.n)

    @property
    def variance(self) -> float:
        return self.n * (1.0 + 2.0 * self.kappa) / (1.0 + self.kappa) ** 2

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)

    def log_kernel(self, w):
        """ln of the density without its e^{-w} factor."""
        arr = np.asarray(w, dtype=np.float64)
        if np.any(np.isnan(arr)) or np.any(arr < 0):
            raise DomainError("w must be >= 0")
        return special.xlogy(self.n - 1, arr) - special.gammaln(self.n) + np.asarray(log_psi_factor(arr, self.n, self.kappa))

    def pdf(self, w):
        return scalar_wishart_pdf(w, self)

    def cdf(self, w):
        return scalar_wishart_cdf(w, self)


def scalar_wishart_pdf(w, d: ScalarWishartDensity):
    """exp((n−1)·ln w − w − ln Γ(n))·ψ(w, n), in the log domain."""
    arr = np.asarray(w, dtype=np.float64)
    vals = np.exp(d.log_kernel(arr) - arr)
    return float(vals) if np.ndim(w) == 0 else vals


@lru_cache(maxsize=64)
def _cdf_table(n: int, kappa: float) -> Tuple[np.ndarray, np.ndarray]:
    d = ScalarWishartDensity(n, kappa)
    grid = np.linspace(0.0, d.mean + CDF_SPAN_STD * d.std + 10.0, CDF_GRID_POINTS)
    cum = integrate.cumulative_trapezoid(scalar_wishart_pdf(grid, d), grid, initial=0.0)
    cum /= cum[-1]
    grid.setflags(write=False)
    cum.setflags(write=False)
    return grid, cum


def scalar_wishart_cdf(w, d: ScalarWishartDensity):
    """CDF from the cumulative integral of the pdf on a fine grid."""
    arr = np.asarray(w, dtype=np.float64)
    grid, cum = _cdf_table(d.n, d.kappa)
    vals = np.interp(arr, grid, cum, left=0.0, right=1.0)
    return float(vals) if np.ndim(w) == 0 else vals


def sample_scalar_wishart(
    d: ScalarWishartDensity, rng: Union[RngStream, np.random.Generator], count: int
) -> np.ndarray:
    """``count`` draws of Σ|h_i|² over n Rician entries."""
    gen = rng.generator() if isinstance(rng, RngStream) else rng
    cfg = ChannelConfig(n_t=d.n, n_r=1, kappa=d.kappa, power=0.0)
    out = []
    left = int(count)
    while left > 0:
        k = min(CHUNK, left)
        h = sample_h_batch(cfg, gen, k)[:, 0, :]
        out.append(np.sum(h.real ** 2 + h.imag ** 2, axis=-1))
        left -= k
    return np.concatenate(out) if out else np.empty(0)


def _require_rank_one(cfg: ChannelConfig, what: str) -> None:
    if cfg.m != 1:
        raise UnsupportedConfigurationError(
            f"{what} needs min(n_t, n_r) = 1 (got n_t={cfg.n_t}, n_r={cfg.n_r}); use Monte Carlo instead"
        )


def quadrature_capacity_m1(cfg: ChannelConfig, rule: Optional[QuadratureRule] = None) -> CapacityEstimate:
    """∫ ln(1 + (P/N_T)·w)·pdf(w) dw with n = max(N_T, N_R).

    For N_T = 1 the SNR factor is P, for N_R = 1 it is P/N_T.
    """
    _require_rank_one(cfg, "quadrature_capacity_m1")
    snr = cfg.power / cfg.n_t
    if snr == 0.0:
        return CapacityEstimate(nats=0.0, uncertainty=0.0, method=QUADRATURE)
    d = ScalarWishartDensity(cfg.n, cfg.kappa)

    def f(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=np.float64)
        return np.log1p(snr * w) * np.exp(d.log_kernel(w))

    value, err = integrate_semiinfinite(f, rule or default_rule(), weighted=True, scale=(d.mean, d.std))
    logger.debug("quad m=1 n=%d kappa=%g snr=%g: %.9g (err %.2e)", d.n, d.kappa, snr, value, err)
    return CapacityEstimate(nats=value, uncertainty=err, method=QUADRATURE)


@dataclass(frozen=True)
class EigenFitReport:
    """Kolmogorov–Smirnov fit of sampled W against the scalar Wishart CDF."""

    statistic: float
    p_value: float
    samples: int
    n: int
    kappa: float
    sample_mean: float
    expected_mean: float


def empirical_eigen_check(cfg: ChannelConfig, spec: MonteCarloSpec) -> EigenFitReport:
    """KS distance between the sampled Gram eigenvalue and the density's CDF (m = 1 only)."""
    _require_rank_one(cfg, "empirical_eigen_check")

    def statistic(h: np.ndarray) -> np.ndarray:
        return np.sum(h.real ** 2 + h.imag ** 2, axis=(-2, -1))

    draws = collect_sharded(cfg, spec, statistic)[:, 0]
    d = ScalarWishartDensity(cfg.n, cfg.kappa)
    result = stats.kstest(draws, d.cdf)
    logger.info("eigen check n=%d kappa=%g: KS=%.4f p=%.3g", d.n, d.kappa, result.statistic, result.pvalue)
    return EigenFitReport(
        statistic=float(result.statistic),
        p_value=float(result.pvalue),
        samples=int(draws.size),
        n=d.n,
        kappa=d.kappa,
        sample_mean=float(np.mean(draws)),
        expected_mean=d.mean,
    )
