# -*- coding: utf-8 -*-
"""End-to-end checks at desk scale; deselect with `pytest -m "not slow"`."""
import math

import pytest

from apps.cli import main as cli_main
from core.bounds import (
    asymptotic_capacity_large_nt,
    capacity_upper_bound,
    deterministic_capacity,
    new_scheme_lower_bound,
    new_scheme_upper_bound,
)
from core.channel import ChannelConfig, rician_weighted, scaled_identity
from core.estimators import MonteCarloSpec, mc_ergodic_capacity, mc_new_scheme_capacity, quadrature_capacity_m1

pytestmark = pytest.mark.slow

P10 = 10.0


def _cfg(n_t, n_r, kappa, power):
    return ChannelConfig(n_t=n_t, n_r=n_r, kappa=kappa, power=power)


@pytest.mark.parametrize("n_t,n_r", [(1, 1), (2, 1), (2, 3), (4, 4)])
def test_deterministic_limit(n_t, n_r):
    cfg = _cfg(n_t, n_r, 1e6, 3.0)
    est = mc_ergodic_capacity(cfg, rician_weighted(cfg), MonteCarloSpec(samples=5000, seed=1, shards=2))
    assert abs(est.nats - deterministic_capacity(cfg).nats) < 1e-3


@pytest.mark.parametrize("n_r", [1, 2, 4, 8])
def test_rayleigh_quadrature_matches_sampling(n_r, rule):
    cfg = _cfg(1, n_r, 0.0, P10)
    quad = quadrature_capacity_m1(cfg, rule)
    mc = mc_ergodic_capacity(cfg, scaled_identity(cfg), MonteCarloSpec(samples=100_000, seed=n_r, shards=4))
    assert abs(quad.nats - mc.nats) <= max(4 * mc.std_error, 1e-3)


def test_single_transmit_antenna_ordering(rule):
    def cap(n_r, kappa):
        return quadrature_capacity_m1(_cfg(1, n_r, kappa, P10), rule).nats

    for n_r in range(1, 5):
        assert cap(n_r, 10.0) > cap(n_r, 1.0) > cap(n_r, 0.0)
    for kappa in (0.0, 1.0, 10.0):
        gaps = [math.log1p(n_r * P10) - cap(n_r, kappa) for n_r in (1, 8)]
        assert gaps[0] > 0 and gaps[1] > 0
        assert gaps[1] < gaps[0]


def test_single_receive_antenna_loose_bound(rule):
    for n_t in (2, 4):
        base = quadrature_capacity_m1(_cfg(n_t, 1, 0.0, P10), rule).nats
        for kappa in (1.0, 10.0):
            assert quadrature_capacity_m1(_cfg(n_t, 1, kappa, P10), rule).nats > base
    cfg = _cfg(8, 1, 10.0, P10)
    assert capacity_upper_bound(cfg).nats - quadrature_capacity_m1(cfg, rule).nats > 0.5


def test_large_array_asymptote():
    values = []
    for kappa in (0.0, 1.0, 10.0):
        cfg = _cfg(256, 2, kappa, 1.0)
        est = mc_ergodic_capacity(cfg, scaled_identity(cfg), MonteCarloSpec(samples=20_000, seed=4, shards=4))
        target = asymptotic_capacity_large_nt(2, kappa, 1.0).nats
        assert est.nats == pytest.approx(target, rel=0.02)
        values.append(est.nats)
    assert values[0] > values[1] > values[2]


@pytest.mark.parametrize("kappa", [1.0, 10.0])
@pytest.mark.parametrize("power", [1.0, 10.0])
def test_rician_weighted_bracket(kappa, power, rule):
    for n_t in (1, 2, 4, 8, 16):
        cfg = _cfg(n_t, 1, kappa, power)
        mc = mc_new_scheme_capacity(cfg, MonteCarloSpec(samples=50_000, seed=n_t, shards=2))
        lb = new_scheme_lower_bound(cfg, rule).nats
        ub = new_scheme_upper_bound(cfg).nats
        assert lb - 3 * mc.std_error <= mc.nats <= ub + 3 * mc.std_error
        if kappa == 10.0 and n_t >= 8:
            assert ub - lb < 0.15


def test_rician_weighted_beats_isotropic():
    cfg = _cfg(8, 1, 10.0, P10)
    spec = MonteCarloSpec(samples=50_000, seed=9, shards=4)
    weighted = mc_new_scheme_capacity(cfg, spec)
    isotropic = mc_ergodic_capacity(cfg, scaled_identity(cfg), spec)
    margin = 3 * math.hypot(weighted.std_error, isotropic.std_error)
    assert weighted.nats - isotropic.nats > 0.3 + margin


@pytest.mark.parametrize("n_t", [1, 2, 4, 8, 16])
@pytest.mark.parametrize("kappa", [1.0, 10.0])
def test_rician_weighted_never_below_isotropic(n_t, kappa):
    cfg = _cfg(n_t, 1, kappa, P10)
    spec = MonteCarloSpec(samples=40_000, seed=13, shards=4)
    weighted = mc_new_scheme_capacity(cfg, spec)
    isotropic = mc_ergodic_capacity(cfg, scaled_identity(cfg), spec.with_seed(14))
    assert weighted.nats >= isotropic.nats - 3 * math.hypot(weighted.std_error, isotropic.std_error)


def test_sweep_reruns_are_byte_identical(tmp_path):
    ini = tmp_path / "mc.ini"
    ini.write_text(
        "[SWEEP]\nVARIABLE = n_t\nGRID = 1, 2, 4\nMETHODS = mc_identity, mc_rician, new_scheme_mc\n\n"
        "[CHANNEL]\nN_R = 1\nKAPPA = 3\nSNR_DB = 10\n\n[MONTE_CARLO]\nSAMPLES = 20000\nSHARDS = 4\nSEED = 77\n",
        encoding="utf-8",
    )
    outs = [tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "c.csv"]
    assert cli_main.main(["sweep", "--config", str(ini), "--out", str(outs[0])]) == 0
    assert cli_main.main(["sweep", "--config", str(ini), "--out", str(outs[1])]) == 0
    assert cli_main.main(["sweep", "--config", str(ini), "--workers", "3", "--out", str(outs[2])]) == 0
    assert outs[0].read_bytes() == outs[1].read_bytes() == outs[2].read_bytes()
