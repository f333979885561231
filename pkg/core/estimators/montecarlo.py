# -*- coding: utf-8 -*-
"""Sharded Monte Carlo estimation of ergodic capacity.

The draw budget is split across shards, each with its own RngStream
(seed, shard index). Shards run on a thread pool and their partial
moments are merged in shard order, so results depend only on
(cfg, covariance, samples, seed, shards), never on scheduling.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, List

import numpy as np
from scipy import stats

from core.channel import ChannelConfig, CovarianceScheme, RngStream, sample_h_batch
from core.errors import DomainError, UnsupportedConfigurationError
from core.estimate import MONTE_CARLO, CapacityEstimate
from core.linalg import batched_logdet_posdef, hermitian_sqrt

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 200_000
DEFAULT_SEED = 20040101
DEFAULT_CONFIDENCE = 0.95
MIN_SAMPLES = 100
CHUNK = 4096

# maps a (k, N_R, N_T) batch of H to a (k, j) array of per-draw statistics
Statistic = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class MonteCarloSpec:
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    shards: int = 1
    confidence: float = DEFAULT_CONFIDENCE

    def __post_init__(self) -> None:
        samples, shards, seed = int(self.samples), int(self.shards), int(self.seed)
        if samples < MIN_SAMPLES:
            raise DomainError(f"samples must be >= {MIN_SAMPLES}, got {samples}")
        if not 1 <= shards <= samples:
            raise DomainError(f"shards must be in [1, samples], got {shards}")
        if not 0 <= seed < 2**64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
        if not 0.0 < float(self.confidence) < 1.0:
            raise DomainError(f"confidence must be in (0, 1), got {self.confidence}")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "shards", shards)
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "confidence", float(self.confidence))

    def with_seed(self, seed: int) -> "MonteCarloSpec":
        return replace(self, seed=seed)

    def shard_sizes(self) -> List[int]:
        base, extra = divmod(self.samples, self.shards)
        return [base + (1 if i < extra else 0) for i in range(self.shards)]

    @property
    def z(self) -> float:
        """Two-sided normal quantile for the confidence level."""
        return float(stats.norm.ppf(0.5 + 0.5 * self.confidence))


@dataclass(frozen=True)
class _Moments:
    count: int
    mean: np.ndarray
    m2: np.ndarray

    @classmethod
    def of(cls, values: np.ndarray) -> "_Moments":
        mean = values.mean(axis=0)
        return cls(values.shape[0], mean, ((values - mean) ** 2).sum(axis=0))

    def merge(self, other: "_Moments") -> "_Moments":
        if self.count == 0:
            return other
        total = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * (other.count / total)
        m2 = self.m2 + other.m2 + delta * delta * (self.count * other.count / total)
        return _Moments(total, mean, m2)

    def std_error(self) -> np.ndarray:
        if self.count < 2:
            return np.zeros_like(self.mean)
        return np.sqrt(self.m2 / (self.count - 1) / self.count)


def _shard_batches(cfg: ChannelConfig, seed: int, shard: int, size: int):
    gen = RngStream(seed, shard).generator()
    done = 0
    while done < size:
        k = min(CHUNK, size - done)
        yield sample_h_batch(cfg, gen, k)
        done += k


def _shard_moments(cfg: ChannelConfig, spec: MonteCarloSpec, statistic: Statistic, shard: int, size: int) -> _Moments:
    acc = _Moments(0, np.zeros(1), np.zeros(1))
    for batch in _shard_batches(cfg, spec.seed, shard, size):
        acc = acc.merge(_Moments.of(np.asarray(statistic(batch)).reshape(batch.shape[0], -1)))
    return acc


def _pool_size(shards: int) -> int:
    return max(1, min(shards, os.cpu_count() or 1))


def run_sharded(cfg: ChannelConfig, spec: MonteCarloSpec, statistic: Statistic) -> _Moments:
    """Merged moments of ``statistic`` over ``spec.samples`` draws of H."""
    sizes = spec.shard_sizes()
    logger.debug("monte carlo: %d samples over %d shards (seed %d)", spec.samples, len(sizes), spec.seed)
    with ThreadPoolExecutor(max_workers=_pool_size(len(sizes))) as pool:
        futures = [pool.submit(_shard_moments, cfg, spec, statistic, i, size) for i, size in enumerate(sizes)]
        parts = [f.result() for f in futures]
    total = parts[0]
    for part in parts[1:]:
        total = total.merge(part)
    return total


def collect_sharded(cfg: ChannelConfig, spec: MonteCarloSpec, statistic: Statistic) -> np.ndarray:
    """Raw per-draw statistics in shard order (same draws as run_sharded)."""
    out = []
    for shard, size in enumerate(spec.shard_sizes()):
        for batch in _shard_batches(cfg, spec.seed, shard, size):
            out.append(np.asarray(statistic(batch)).reshape(batch.shape[0], -1))
    return np.concatenate(out, axis=0)


def _estimate(moments: _Moments, spec: MonteCarloSpec, column: int = 0) -> CapacityEstimate:
    std_err = float(moments.std_error()[column])
    return CapacityEstimate(
        nats=float(moments.mean[column]),
        uncertainty=spec.z * std_err,
        method=MONTE_CARLO,
        std_error=std_err,
    )


def _logdet_statistic(cfg: ChannelConfig, q: CovarianceScheme) -> Statistic:
    mat = q.matrix.entries
    diag = np.real(np.diagonal(mat))
    if not np.any(mat - np.diag(np.diagonal(mat))):
        root = np.sqrt(np.clip(diag, 0.0, None))

        def apply(h: np.ndarray) -> np.ndarray:
            return h * root
    else:
        root_mat = hermitian_sqrt(q.matrix).entries

        def apply(h: np.ndarray) -> np.ndarray:
            return h @ root_mat

    left = cfg.n_r <= cfg.n_t

    def statistic(h: np.ndarray) -> np.ndarray:
        # log det(I + H Q Hᴴ) on the smaller side, with A = H Q^{1/2}
        a = apply(h)
        a_h = np.conj(np.swapaxes(a, -1, -2))
        g = a @ a_h if left else a_h @ a
        dim = g.shape[-1]
        if dim == 1:
            return np.log1p(np.real(g[:, 0, 0]))
        return batched_logdet_posdef(g + np.eye(dim))

    return statistic


def mc_ergodic_capacity(cfg: ChannelConfig, q: CovarianceScheme, spec: MonteCarloSpec) -> CapacityEstimate:
    """E_H log det(I + H·Q·Hᴴ) by Monte Carlo, with a normal-approximation interval."""
    if q.dim != cfg.n_t:
        raise DomainError(f"covariance is {q.dim}x{q.dim} but n_t = {cfg.n_t}")
    if q.matrix.trace() == 0.0:
        return CapacityEstimate(nats=0.0, uncertainty=0.0, method=MONTE_CARLO)
    estimate = _estimate(run_sharded(cfg, spec, _logdet_statistic(cfg, q)), spec)
    logger.info(
        "mc %s n_t=%d n_r=%d kappa=%g P=%g: %.6f ± %.2e",
        q.tag, cfg.n_t, cfg.n_r, cfg.kappa, cfg.power, estimate.nats, estimate.uncertainty,
    )
    return estimate


def _require_single_receiver(cfg: ChannelConfig, what: str) -> None:
    if cfg.n_r != 1:
        raise UnsupportedConfigurationError(f"{what} is defined for n_r = 1 only (got n_r={cfg.n_r})")


def _w_and_z_sq(h: np.ndarray):
    row = h[:, 0, :]
    w = np.sum(row.real ** 2 + row.imag ** 2, axis=-1)
    z = np.sum(row, axis=-1)
    return w, z.real ** 2 + z.imag ** 2


def mc_new_scheme_capacity(cfg: ChannelConfig, spec: MonteCarloSpec) -> CapacityEstimate:
    """E ln(1 + P/(N_T(1+κ))·(W + κ|Z|²)) with W = Σ|h_i|² and Z = Σh_i from the same draw."""
    _require_single_receiver(cfg, "mc_new_scheme_capacity")
    if cfg.power == 0.0:
        return CapacityEstimate(nats=0.0, uncertainty=0.0, method=MONTE_CARLO)
    gain = cfg.power / (cfg.n_t * (1.0 + cfg.kappa))

    def statistic(h: np.ndarray) -> np.ndarray:
        w, z_sq = _w_and_z_sq(h)
        return np.log1p(gain * (w + cfg.kappa * z_sq))

    return _estimate(run_sharded(cfg, spec, statistic), spec)


@dataclass(frozen=True)
class NewSchemeMoments:
    """Sample vs analytic first moments of W and |Z|² at one receive antenna."""

    samples: int
    mean_w: float
    std_error_w: float
    expected_w: float
    mean_z_sq: float
    std_error_z_sq: float
    expected_z_sq: float

    def within(self, sigmas: float = 4.0) -> bool:
        return (
            abs(self.mean_w - self.expected_w) <= sigmas * self.std_error_w
            and abs(self.mean_z_sq - self.expected_z_sq) <= sigmas * self.std_error_z_sq
        )


def mc_new_scheme_moments(cfg: ChannelConfig, spec: MonteCarloSpec) -> NewSchemeMoments:
    """Checks EW = N_T and E|Z|² = N_T(1+N_Tκ)/(1+κ) on the sampler."""
    _require_single_receiver(cfg, "mc_new_scheme_moments")

    def statistic(h: np.ndarray) -> np.ndarray:
        return np.stack(_w_and_z_sq(h), axis=-1)

    moments = run_sharded(cfg, spec, statistic)
    err = moments.std_error()
    return NewSchemeMoments(
        samples=moments.count,
        mean_w=float(moments.mean[0]),
        std_error_w=float(err[0]),
        expected_w=float(cfg.n_t),
        mean_z_sq=float(moments.mean[1]),
        std_error_z_sq=float(err[1]),
        expected_z_sq=cfg.n_t * (1.0 + cfg.n_t * cfg.kappa) / (1.0 + cfg.kappa),
    )
