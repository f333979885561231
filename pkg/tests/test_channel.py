# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest
from scipy import integrate, stats

from core.channel import (
    EXPLICIT,
    RICIAN_WEIGHTED,
    SCALED_IDENTITY,
    ChannelConfig,
    RngStream,
    awgn_covariance,
    covariance,
    db_to_linear,
    derive_seed,
    explicit_covariance,
    linear_to_db,
    mean_matrix,
    rician_envelope_cdf,
    rician_envelope_pdf,
    rician_weighted,
    sample_h,
    sample_h_batch,
    scaled_identity,
    upsilon,
)
from core.errors import DomainError
from core.linalg import HermitianMatrix, hermitian_eigen


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n_t=0, n_r=1, kappa=1.0, power=1.0),
        dict(n_t=1.5, n_r=1, kappa=1.0, power=1.0),
        dict(n_t=True, n_r=1, kappa=1.0, power=1.0),
        dict(n_t=1, n_r=1, kappa=-0.1, power=1.0),
        dict(n_t=1, n_r=1, kappa=math.inf, power=1.0),
        dict(n_t=1, n_r=1, kappa=1.0, power=-1.0),
        dict(n_t=1, n_r=1, kappa=1.0, power=math.nan),
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(DomainError):
        ChannelConfig(**kwargs)


@pytest.mark.parametrize("kappa", [0.0, 0.5, 1.0, 10.0, 1e6])
def test_config_normalization(kappa):
    cfg = ChannelConfig(n_t=2, n_r=3, kappa=kappa, power=1.0)
    assert cfg.mu ** 2 + cfg.two_sigma_sq == pytest.approx(1.0, rel=1e-12)
    assert cfg.m == 2 and cfg.n == 3
    if kappa > 0:
        assert cfg.mu ** 2 / cfg.two_sigma_sq == pytest.approx(kappa, rel=1e-12)


def test_snr_conversion():
    cfg = ChannelConfig.from_snr_db(1, 1, 0.0, 10.0)
    assert cfg.power == pytest.approx(10.0)
    assert db_to_linear(0.0) == 1.0
    assert linear_to_db(100.0) == pytest.approx(20.0)
    with pytest.raises(DomainError):
        linear_to_db(0.0)


def test_with_replaces_and_revalidates():
    cfg = ChannelConfig(n_t=2, n_r=1, kappa=1.0, power=10.0)
    assert cfg.with_(n_t=4).n_t == 4
    with pytest.raises(DomainError):
        cfg.with_(kappa=-1.0)


def test_rng_stream_is_reproducible():
    cfg = ChannelConfig(n_t=2, n_r=2, kappa=1.0, power=1.0)
    a = sample_h(cfg, RngStream(7, 0)).entries
    b = sample_h(cfg, RngStream(7, 0)).entries
    c = sample_h(cfg, RngStream(7, 1)).entries
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, c)


def test_rng_stream_validation():
    with pytest.raises(DomainError):
        RngStream(-1)
    with pytest.raises(DomainError):
        RngStream(1, 2 ** 64)


def test_derive_seed():
    assert derive_seed(5, 0) == derive_seed(5, 0)
    assert derive_seed(5, 0) != derive_seed(5, 1)
    assert 0 <= derive_seed(5, 3) < 2 ** 64


def test_sampler_moments():
    cfg = ChannelConfig(n_t=1, n_r=1, kappa=1.0, power=1.0)
    gen = RngStream(11).generator()
    h = sample_h_batch(cfg, gen, 200_000)[:, 0, 0]
    power = np.abs(h) ** 2
    se = power.std(ddof=1) / math.sqrt(power.size)
    assert abs(power.mean() - 1.0) < 4 * se
    mean = mean_matrix(cfg).entries[0, 0]
    se_mean = math.sqrt(cfg.sigma_sq / h.size)
    assert abs(h.real.mean() - mean.real) < 4 * se_mean
    assert abs(h.imag.mean() - mean.imag) < 4 * se_mean


def test_sampler_deterministic_limit():
    cfg = ChannelConfig(n_t=3, n_r=2, kappa=1e12, power=1.0)
    h = sample_h(cfg, RngStream(3)).entries
    assert np.max(np.abs(h - (1 + 1j) / math.sqrt(2))) < 1e-5


def test_sampled_gram_mean_is_upsilon():
    cfg = ChannelConfig(n_t=3, n_r=2, kappa=2.0, power=1.0)
    h = sample_h_batch(cfg, RngStream(5).generator(), 100_000)
    grams = np.conj(np.swapaxes(h, -1, -2)) @ h / cfg.n_r
    mean = grams.mean(axis=0)
    se = grams.std(axis=0, ddof=1) / math.sqrt(h.shape[0])
    target = upsilon(cfg).entries
    assert np.all(np.abs(mean.real - target.real) <= 4 * se.real + 1e-12)


def test_upsilon_eigenvalues():
    cfg = ChannelConfig(n_t=4, n_r=1, kappa=3.0, power=1.0)
    values, _ = hermitian_eigen(upsilon(cfg))
    assert values[0] == pytest.approx((1 + 4 * 3.0) / 4.0, rel=1e-10)
    np.testing.assert_allclose(values[1:], 1.0 / 4.0, rtol=1e-10)


def test_mean_matrix_rank_one_eigenvalue():
    cfg = ChannelConfig(n_t=3, n_r=2, kappa=4.0, power=1.0)
    m = mean_matrix(cfg).entries
    values, _ = hermitian_eigen(HermitianMatrix(m @ m.conj().T))
    assert values[0] == pytest.approx(cfg.m * cfg.n * cfg.mu ** 2, rel=1e-10)


@pytest.mark.parametrize("kappa", [0.0, 1.0, 10.0])
def test_envelope_pdf_normalized(kappa):
    total, _ = integrate.quad(lambda r: rician_envelope_pdf(r, kappa), 0.0, np.inf, epsabs=1e-12, epsrel=1e-12)
    assert total == pytest.approx(1.0, abs=1e-8)


def test_envelope_pdf_matches_scipy_rice():
    kappa = 2.5
    r = np.linspace(0.05, 3.0, 25)
    ref = stats.rice.pdf(r, math.sqrt(2 * kappa), scale=1 / math.sqrt(2 * (1 + kappa)))
    np.testing.assert_allclose(rician_envelope_pdf(r, kappa), ref, rtol=1e-9)
    assert rician_envelope_pdf(0.0, kappa) == 0.0


def test_envelope_rayleigh_limit():
    r = np.array([0.3, 1.0, 2.0])
    np.testing.assert_allclose(rician_envelope_pdf(r, 0.0), 2 * r * np.exp(-r * r), rtol=1e-12)
    np.testing.assert_allclose(rician_envelope_cdf(r, 0.0), 1 - np.exp(-r * r), rtol=1e-9)


def test_envelope_cdf_matches_samples():
    cfg = ChannelConfig(n_t=1, n_r=1, kappa=3.0, power=1.0)
    env = np.abs(sample_h_batch(cfg, RngStream(9).generator(), 50_000)[:, 0, 0])
    result = stats.kstest(env, lambda r: rician_envelope_cdf(r, cfg.kappa))
    assert result.statistic < 0.01


@pytest.mark.parametrize("kappa", [0.0, 1.0, 10.0])
def test_covariance_traces(kappa):
    cfg = ChannelConfig(n_t=4, n_r=2, kappa=kappa, power=10.0)
    for scheme in (scaled_identity(cfg), rician_weighted(cfg), awgn_covariance(cfg)):
        assert scheme.matrix.trace() == pytest.approx(10.0, rel=1e-12)
        assert scheme.dim == 4


def test_rician_weighted_equals_identity_without_los():
    cfg = ChannelConfig(n_t=3, n_r=1, kappa=0.0, power=6.0)
    np.testing.assert_allclose(rician_weighted(cfg).matrix.entries, scaled_identity(cfg).matrix.entries)


def test_covariance_dispatch():
    cfg = ChannelConfig(n_t=2, n_r=2, kappa=1.0, power=1.0)
    assert covariance(cfg, SCALED_IDENTITY).tag == SCALED_IDENTITY
    assert covariance(cfg, RICIAN_WEIGHTED).tag == RICIAN_WEIGHTED
    with pytest.raises(DomainError):
        covariance(cfg, EXPLICIT)


def test_explicit_covariance_clips_tiny_negative_eigenvalues():
    cfg = ChannelConfig(n_t=2, n_r=1, kappa=1.0, power=1.0)
    q = explicit_covariance(cfg, np.diag([1.0, -1e-13]))
    values, _ = hermitian_eigen(q.matrix)
    assert values[-1] >= 0.0
    assert q.tag == EXPLICIT


def test_explicit_covariance_rejects_bad_input():
    cfg = ChannelConfig(n_t=2, n_r=1, kappa=1.0, power=1.0)
    with pytest.raises(DomainError):
        explicit_covariance(cfg, np.diag([1.0, -0.1]))
    with pytest.raises(DomainError):
        explicit_covariance(cfg, np.diag([1.0, 0.5]))
    with pytest.raises(DomainError):
        explicit_covariance(cfg, np.eye(3) / 3)
