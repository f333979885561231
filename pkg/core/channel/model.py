# -*- coding: utf-8 -*-
"""Rician MIMO channel model.

Entries of H (N_R × N_T) are i.i.d. complex Gaussian with mean μ/√2·(1+j)
and variance 2σ², normalized so that |μ|² + 2σ² = 1 and κ = |μ|²/2σ².

Usage:
    cfg = ChannelConfig(n_t=2, n_r=2, kappa=1.0, power=10.0)
    h = sample_h(cfg, RngStream(seed=7, stream_id=0))
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import Union

import numpy as np
from scipy import stats

from core.errors import DomainError
from core.linalg import ComplexMatrix, HermitianMatrix, hermitian_eigen
from core.special import log_bessel_i

logger = logging.getLogger(__name__)

SCALED_IDENTITY = "scaled_identity"
RICIAN_WEIGHTED = "rician_weighted"
EXPLICIT = "explicit"
COVARIANCE_TAGS = (SCALED_IDENTITY, RICIAN_WEIGHTED, EXPLICIT)

POWER_SLACK = 1e-9
PSD_CLIP = 1e-12
_SEED_LIMIT = 2**64


def db_to_linear(snr_db: float) -> float:
    return float(10.0 ** (float(snr_db) / 10.0))


def linear_to_db(power: float) -> float:
    if not power > 0:
        raise DomainError(f"power must be > 0 to convert to dB, got {power}")
    return float(10.0 * math.log10(power))


@dataclass(frozen=True)
class ChannelConfig:
    """Antenna counts, Rician factor κ and total transmit power P (linear)."""

    n_t: int
    n_r: int
    kappa: float
    power: float

    def __post_init__(self) -> None:
        for name in ("n_t", "n_r"):
            val = getattr(self, name)
            if isinstance(val, bool) or int(val) != val or int(val) < 1:
                raise DomainError(f"{name} must be a positive integer, got {val!r}")
            object.__setattr__(self, name, int(val))
        kappa = float(self.kappa)
        if not (math.isfinite(kappa) and kappa >= 0):
            raise DomainError(f"kappa must be finite and >= 0, got {self.kappa!r}")
        power = float(self.power)
        if not (math.isfinite(power) and power >= 0):
            raise DomainError(f"power must be finite and >= 0, got {self.power!r}")
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "power", power)

    @classmethod
    def from_snr_db(cls, n_t: int, n_r: int, kappa: float, snr_db: float) -> "ChannelConfig":
        return cls(n_t=n_t, n_r=n_r, kappa=kappa, power=db_to_linear(snr_db))

    @property
    def m(self) -> int:
        return min(self.n_t, self.n_r)

    @property
    def n(self) -> int:
        return max(self.n_t, self.n_r)

    @property
    def mu(self) -> float:
        return math.sqrt(self.kappa / (1.0 + self.kappa))

    @property
    def two_sigma_sq(self) -> float:
        return 1.0 / (1.0 + self.kappa)

    @property
    def sigma_sq(self) -> float:
        return 0.5 / (1.0 + self.kappa)

    def with_(self, **changes) -> "ChannelConfig":
        return replace(self, **changes)


@dataclass(frozen=True)
class RngStream:
    """Splittable random stream: (seed, stream_id) names one independent sequence."""

    seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        for name in ("seed", "stream_id"):
            val = int(getattr(self, name))
            if not 0 <= val < _SEED_LIMIT:
                raise DomainError(f"{name} must be a 64-bit unsigned integer, got {val}")
            object.__setattr__(self, name, val)

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id,))
        return np.random.Generator(np.random.PCG64(seq))


def derive_seed(seed: int, index: int) -> int:
    """Deterministic 64-bit child seed for (seed, index), e.g. one per sweep point."""
    state = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(index),)).generate_state(1, np.uint64)
    return int(state[0])


def sample_h_batch(cfg: ChannelConfig, gen: np.random.Generator, count: int) -> np.ndarray:
    """``count`` independent fading matrices, shape (count, N_R, N_T)."""
    draws = gen.standard_normal((int(count), cfg.n_r, cfg.n_t, 2))
    mean = cfg.mu / math.sqrt(2.0) * (1.0 + 1.0j)
    sigma = math.sqrt(cfg.sigma_sq)
    return mean + sigma * (draws[..., 0] + 1.0j * draws[..., 1])


def sample_h(cfg: ChannelConfig, rng: Union[RngStream, np.random.Generator]) -> ComplexMatrix:
    gen = rng.generator() if isinstance(rng, RngStream) else rng
    return ComplexMatrix(sample_h_batch(cfg, gen, 1)[0])


def mean_matrix(cfg: ChannelConfig) -> ComplexMatrix:
    """M = E{H}: every entry μ/√2·(1+j)."""
    mean = cfg.mu / math.sqrt(2.0) * (1.0 + 1.0j)
    return ComplexMatrix(np.full((cfg.n_r, cfg.n_t), mean, dtype=np.complex128))


def rician_envelope_pdf(r, kappa: float):
    """f_R(r) = 2(1+κ)r·exp(-(1+κ)r² - κ)·I₀(2√(κ(1+κ))·r), in the log domain."""
    if not kappa >= 0:
        raise DomainError(f"kappa must be >= 0, got {kappa}")
    arr = np.asarray(r, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any(arr < 0):
        raise DomainError("envelope r must be >= 0")
    out = np.zeros_like(arr)
    pos = arr > 0
    rp = arr[pos]
    log_pdf = (
        math.log(2.0 * (1.0 + kappa))
        + np.log(rp)
        - (1.0 + kappa) * rp * rp
        - kappa
        + np.asarray(log_bessel_i(0, 2.0 * math.sqrt(kappa * (1.0 + kappa)) * rp))
    )
    out[pos] = np.exp(log_pdf)
    return float(out) if np.ndim(r) == 0 else out


def rician_envelope_cdf(r, kappa: float):
    """CDF of the envelope; scipy's Rice law with b = √(2κ), scale = 1/√(2(1+κ))."""
    if not kappa >= 0:
        raise DomainError(f"kappa must be >= 0, got {kappa}")
    vals = stats.rice.cdf(np.asarray(r, dtype=np.float64), math.sqrt(2.0 * kappa), scale=1.0 / math.sqrt(2.0 * (1.0 + kappa)))
    return float(vals) if np.ndim(r) == 0 else vals


def upsilon(cfg: ChannelConfig) -> HermitianMatrix:
    """Υ = E{HᴴH}/N_R: unit diagonal, κ/(1+κ) off the diagonal."""
    mat = np.full((cfg.n_t, cfg.n_t), cfg.kappa / (1.0 + cfg.kappa), dtype=np.complex128)
    np.fill_diagonal(mat, 1.0)
    return HermitianMatrix(mat)


@dataclass(frozen=True, eq=False)
class CovarianceScheme:
    """Transmit covariance Q with its tag and the power budget it must respect."""

    tag: str
    matrix: HermitianMatrix
    power: float

    def __post_init__(self) -> None:
        if self.tag not in COVARIANCE_TAGS:
            raise DomainError(f"unknown covariance tag {self.tag!r}")
        values, _ = hermitian_eigen(self.matrix)
        scale = max(1.0, float(np.max(np.abs(values))))
        if float(values[-1]) < -PSD_CLIP * scale:
            raise DomainError(f"covariance is not positive semidefinite (min eigenvalue {values[-1]:.3e})")
        trace = self.matrix.trace()
        if trace > self.power + POWER_SLACK:
            raise DomainError(f"covariance trace {trace:.12g} exceeds power budget {self.power:.12g}")

    @property
    def dim(self) -> int:
        return self.matrix.dim


def scaled_identity(cfg: ChannelConfig) -> CovarianceScheme:
    """Q⁰ = (P/N_T)·I."""
    mat = np.eye(cfg.n_t, dtype=np.complex128) * (cfg.power / cfg.n_t)
    return CovarianceScheme(SCALED_IDENTITY, HermitianMatrix(mat), cfg.power)


def rician_weighted(cfg: ChannelConfig) -> CovarianceScheme:
    """Q^κ = P/(N_T(1+κ))·(I + κΨ)."""
    base = np.full((cfg.n_t, cfg.n_t), cfg.kappa, dtype=np.complex128)
    base += np.eye(cfg.n_t)
    mat = base * (cfg.power / (cfg.n_t * (1.0 + cfg.kappa)))
    return CovarianceScheme(RICIAN_WEIGHTED, HermitianMatrix(mat), cfg.power)


def awgn_covariance(cfg: ChannelConfig) -> CovarianceScheme:
    """Q^∞ = (P/N_T)·Ψ, the κ→∞ limit of Q^κ."""
    mat = np.full((cfg.n_t, cfg.n_t), cfg.power / cfg.n_t, dtype=np.complex128)
    return CovarianceScheme(EXPLICIT, HermitianMatrix(mat), cfg.power)


def explicit_covariance(cfg: ChannelConfig, matrix) -> CovarianceScheme:
    """User-supplied Q: symmetrized, eigenvalues in [-1e-12, 0) clipped to 0."""
    arr = np.asarray(matrix, dtype=np.complex128)
    if arr.shape != (cfg.n_t, cfg.n_t):
        raise DomainError(f"covariance must be {cfg.n_t}x{cfg.n_t}, got {arr.shape}")
    sym = HermitianMatrix(0.5 * (arr + arr.conj().T))
    values, vecs = hermitian_eigen(sym)
    if float(values[-1]) < -PSD_CLIP:
        raise DomainError(f"covariance is not positive semidefinite (min eigenvalue {values[-1]:.3e})")
    clipped = np.where(values < 0.0, 0.0, values)
    u = vecs.entries
    return CovarianceScheme(EXPLICIT, HermitianMatrix((u * clipped) @ u.conj().T), cfg.power)


def covariance(cfg: ChannelConfig, tag: str) -> CovarianceScheme:
    if tag == SCALED_IDENTITY:
        return scaled_identity(cfg)
    if tag == RICIAN_WEIGHTED:
        return rician_weighted(cfg)
    raise DomainError(f"covariance tag {tag!r} needs an explicit matrix")
