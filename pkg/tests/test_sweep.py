# -*- coding: utf-8 -*-
import io
import math

import numpy as np
import pytest

from core.bounds import capacity_upper_bound
from core.channel import ChannelConfig
from core.errors import DomainError, OutputError, QuadratureError, SweepValidationError
from core.estimators import MonteCarloSpec
from core.sweep import (
    ERROR_MARKER,
    FIGURE_NUMBERS,
    RunDefaults,
    SeriesSpec,
    SweepRow,
    SweepSpec,
    emit_csv,
    figure_preset_path,
    grid_from_range,
    load_sweep,
    render_csv,
    run_sweep,
)
from core.sweep import runner

BASE = ChannelConfig(n_t=2, n_r=1, kappa=1.0, power=10.0)
FAST_MC = MonteCarloSpec(samples=2000, seed=11, shards=2)


def _spec(**kwargs):
    params = dict(variable="kappa", grid=(0.0, 1.0, 10.0), fixed=BASE, methods=("upper_bound",), mc=FAST_MC)
    params.update(kwargs)
    return SweepSpec(**params)


def _lines(rows):
    return render_csv(rows).splitlines()


def test_grid_from_range():
    grid = grid_from_range(0, 20, 41)
    assert len(grid) == 41
    assert grid[0] == 0.0 and grid[-1] == 20.0 and grid[1] == pytest.approx(0.5)
    assert grid_from_range(3, 9, 1) == (3.0,)
    with pytest.raises(SweepValidationError):
        grid_from_range(0, 1, 0)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(variable="snr"),
        dict(grid=()),
        dict(grid=(1.0, 1.0)),
        dict(grid=(2.0, 1.0)),
        dict(variable="n_t", grid=(1.0, 2.5)),
        dict(variable="n_t", grid=(0.0, 1.0)),
        dict(methods=()),
        dict(methods=("upper_bound", "magic")),
        dict(methods=("upper_bound", "upper_bound")),
        dict(units="hartleys"),
        dict(variable="n_r", grid=(1.0, 2.0), methods=("new_scheme_ub",)),
        dict(fixed=ChannelConfig(n_t=2, n_r=2, kappa=1.0, power=1.0), methods=("quad_m1",)),
        dict(series=(SeriesSpec("a", BASE), SeriesSpec("a", BASE))),
    ],
)
def test_invalid_sweeps_are_rejected(kwargs):
    with pytest.raises(SweepValidationError):
        _spec(**kwargs)


def test_closed_form_sweep_values():
    spec = _spec(methods=("upper_bound", "deterministic"))
    rows = run_sweep(spec)
    assert [r.value for r in rows] == [0.0, 1.0, 10.0]
    for row in rows:
        assert row.ok and row.series == ""
        cap, err = row.results["upper_bound"]
        assert cap == capacity_upper_bound(BASE.with_(kappa=row.value)).nats
        assert err == 0.0
        assert row.results["deterministic"][0] == pytest.approx(math.log1p(20.0))


def test_power_sweep_uses_decibels():
    rows = run_sweep(_spec(variable="power_db", grid=(0.0, 10.0), methods=("deterministic",)))
    assert rows[0].results["deterministic"][0] == pytest.approx(math.log1p(2 * 1.0))
    assert rows[1].results["deterministic"][0] == pytest.approx(math.log1p(2 * 10.0))


def test_bits_are_nats_over_ln2():
    nats = run_sweep(_spec(methods=("upper_bound", "new_scheme_mc")))
    bits = run_sweep(_spec(methods=("upper_bound", "new_scheme_mc"), units="bits"))
    for a, b in zip(nats, bits):
        for method in ("upper_bound", "new_scheme_mc"):
            assert b.results[method][0] == pytest.approx(a.results[method][0] / math.log(2.0), rel=1e-12)


def test_sweep_is_deterministic_and_order_independent():
    spec = _spec(variable="n_t", grid=(1.0, 2.0, 3.0, 4.0), methods=("mc_identity", "new_scheme_mc"))
    serial = render_csv(run_sweep(spec))
    assert render_csv(run_sweep(spec)) == serial
    assert render_csv(run_sweep(spec, workers=3)) == serial


def test_seed_changes_monte_carlo_columns():
    a = run_sweep(_spec(methods=("mc_identity",)))
    b = run_sweep(_spec(methods=("mc_identity",), mc=FAST_MC.with_seed(12)))
    assert a[1].results["mc_identity"] != b[1].results["mc_identity"]


def test_point_failures_are_recorded(monkeypatch):
    def broken(cfg, mc, rule):
        if cfg.kappa == 1.0:
            raise QuadratureError("no convergence", best_estimate=0.5)
        return capacity_upper_bound(cfg)

    monkeypatch.setitem(runner.EVALUATORS, "deterministic", broken)
    rows = run_sweep(_spec(methods=("upper_bound", "deterministic")))
    assert [r.ok for r in rows] == [True, False, True]
    assert "no convergence" in rows[1].errors["deterministic"]
    assert "upper_bound" in rows[1].results
    line = _lines(rows)[2].split(",")
    assert line[3:] == [ERROR_MARKER, ERROR_MARKER]


def test_csv_layout():
    rows = run_sweep(_spec(grid=(1.0,), methods=("upper_bound", "deterministic")))
    lines = render_csv(rows).split("\n")
    assert lines[0] == "kappa,upper_bound_capacity,upper_bound_err,deterministic_capacity,deterministic_err"
    assert len(lines) == 3 and lines[2] == ""
    fields = lines[1].split(",")
    assert fields[0] == "1"
    assert fields[1] == format(capacity_upper_bound(BASE).nats, ".9g")
    assert fields[2] == "0"


def test_csv_series_column():
    spec = _spec(
        methods=("upper_bound",),
        series=(SeriesSpec("nr=1", BASE), SeriesSpec("nr=2", BASE.with_(n_r=2))),
    )
    lines = _lines(run_sweep(spec))
    assert lines[0] == "series,kappa,upper_bound_capacity,upper_bound_err"
    assert len(lines) == 1 + 2 * 3
    assert lines[1].startswith("nr=1,0,") and lines[4].startswith("nr=2,0,")


def test_render_requires_rows():
    with pytest.raises(SweepValidationError):
        render_csv([])


def test_emit_to_stream_and_path(tmp_path):
    rows = run_sweep(_spec())
    buf = io.StringIO()
    assert emit_csv(rows, buf) is None
    path = emit_csv(rows, tmp_path / "out.csv")
    assert path.read_bytes().decode("utf-8") == buf.getvalue()


def test_emit_stdout(capsys):
    rows = run_sweep(_spec(grid=(1.0,)))
    emit_csv(rows)
    assert capsys.readouterr().out == render_csv(rows)


def test_emit_failure_names_destination(tmp_path):
    target = tmp_path / "missing" / "out.csv"
    with pytest.raises(OutputError, match="missing"):
        emit_csv(run_sweep(_spec()), target)


def test_row_columns_follow_methods():
    row = SweepRow(series="", variable="kappa", value=1.0, methods=("a", "b"), results={"a": (1.0, 0.0)}, errors={"b": "x"})
    assert not row.ok


# ---------------------------------------------------------------- sweep files


def _write(tmp_path, text):
    path = tmp_path / "sweep.ini"
    path.write_text(text, encoding="utf-8")
    return path


SWEEP_INI = """
[SWEEP]
VARIABLE = kappa
GRID = 0, 1, 10
METHODS = upper_bound, new_scheme_ub

[CHANNEL]
N_T = 2
N_R = 1
SNR_DB = 10

[MONTE_CARLO]
SAMPLES = 3000
SEED = 5
"""


def test_load_sweep_file(tmp_path):
    spec = load_sweep(_write(tmp_path, SWEEP_INI))
    assert spec.variable == "kappa"
    assert spec.grid == (0.0, 1.0, 10.0)
    assert spec.methods == ("upper_bound", "new_scheme_ub")
    assert spec.fixed.n_t == 2 and spec.fixed.power == pytest.approx(10.0)
    assert spec.mc.samples == 3000 and spec.mc.seed == 5
    assert not spec.multi_series


def test_load_sweep_overrides(tmp_path, caplog):
    spec = load_sweep(
        _write(tmp_path, SWEEP_INI),
        defaults=RunDefaults(),
        channel_overrides={"n_t": 4, "kappa": 3.0, "snr_db": None},
        mc_overrides={"samples": 1000, "seed": 0, "shards": None},
        methods=["deterministic"],
        units="bits",
    )
    assert spec.fixed.n_t == 4
    assert spec.grid == (0.0, 1.0, 10.0)
    assert spec.methods == ("deterministic",)
    assert spec.units == "bits"
    assert spec.mc.samples == 1000 and spec.mc.seed == 0
    assert "swept variable" in caplog.text


def test_load_sweep_range_grid(tmp_path):
    text = SWEEP_INI.replace("GRID = 0, 1, 10", "START = 0\nSTOP = 2\nSTEPS = 5")
    assert load_sweep(_write(tmp_path, text)).grid == (0.0, 0.5, 1.0, 1.5, 2.0)


@pytest.mark.parametrize(
    "old,new",
    [
        ("VARIABLE = kappa", "VARIABLE = beta"),
        ("GRID = 0, 1, 10", "GRID = 0, x"),
        ("GRID = 0, 1, 10", "STEPS = 3"),
        ("N_T = 2", "N_T = 0"),
        ("N_R = 1", "N_R = 2"),
        ("METHODS = upper_bound, new_scheme_ub", "METHODS ="),
        ("SAMPLES = 3000", "SAMPLES = 5"),
    ],
)
def test_load_sweep_rejects_bad_files(tmp_path, old, new):
    with pytest.raises(SweepValidationError):
        load_sweep(_write(tmp_path, SWEEP_INI.replace(old, new)))


def test_load_sweep_missing_file(tmp_path):
    with pytest.raises(SweepValidationError):
        load_sweep(tmp_path / "absent.ini")


@pytest.mark.parametrize("number", FIGURE_NUMBERS)
def test_figure_presets_load(number):
    spec = load_sweep(figure_preset_path(number))
    assert spec.grid and spec.methods


def test_figure_preset_numbers():
    with pytest.raises(SweepValidationError):
        figure_preset_path(10)


def test_figure_four_series():
    spec = load_sweep(figure_preset_path(4))
    assert spec.variable == "n_r"
    assert [s.label for s in spec.series] == ["kappa=1", "rayleigh"]
    assert spec.fixed == spec.series[0].base
    assert spec.series[1].base.kappa == 0.0


def test_figure_one_starts_at_rayleigh_asymptote():
    spec = load_sweep(figure_preset_path(1))
    rows = run_sweep(spec)
    for row in rows:
        if row.value == 0.0:
            n_r = int(row.series.split("=")[1])
            assert row.results["asymptotic"][0] == pytest.approx(n_r * math.log(2.0), rel=1e-12)


def test_figure_three_is_nearly_affine():
    spec = load_sweep(figure_preset_path(3))
    rows = run_sweep(spec)
    pts = [(r.value, r.results["asymptotic"][0]) for r in rows if r.series == "snr=10dB" and r.value >= 4]
    if pts:
        x = np.array([p[0] for p in pts])
        y = np.array([p[1] for p in pts])
        slope, intercept = np.polyfit(x, y, 1)
        assert np.max(np.abs(y - (slope * x + intercept)) / y) < 0.10


@pytest.mark.parametrize("key", ["samples", "shards"])
def test_load_sweep_rejects_zero_mc_override(tmp_path, key):
    overrides = {"samples": None, "seed": None, "shards": None, key: 0}
    with pytest.raises(SweepValidationError) as info:
        load_sweep(_write(tmp_path, SWEEP_INI), mc_overrides=overrides)
    assert isinstance(info.value.__cause__, DomainError)


def test_load_sweep_keeps_seed_zero_override(tmp_path):
    spec = load_sweep(_write(tmp_path, SWEEP_INI), mc_overrides={"samples": None, "seed": 0, "shards": 1})
    assert spec.mc.seed == 0 and spec.mc.shards == 1 and spec.mc.samples == 3000


QUADRATURE_OUTPUT = """
[QUADRATURE]
GL_ORDER = 32
ADAPTIVE_TOLERANCE = 1e-9

[OUTPUT]
UNITS = bits
"""


def test_load_sweep_reads_quadrature_and_output_sections(tmp_path):
    spec = load_sweep(_write(tmp_path, SWEEP_INI + QUADRATURE_OUTPUT), defaults=RunDefaults())
    assert spec.rule.order == 32
    assert spec.rule.tolerance == pytest.approx(1e-9)
    assert spec.rule.fallback_tolerance == pytest.approx(RunDefaults().rule.fallback_tolerance)
    assert spec.units == "bits"
    # explicit units still win over the file
    assert load_sweep(_write(tmp_path, SWEEP_INI + QUADRATURE_OUTPUT), units="nats").units == "nats"


def test_load_sweep_without_quadrature_section_keeps_defaults(tmp_path):
    defaults = RunDefaults()
    spec = load_sweep(_write(tmp_path, SWEEP_INI), defaults=defaults)
    assert spec.rule is defaults.rule
    assert spec.units == defaults.units


def test_load_sweep_rejects_bad_quadrature(tmp_path):
    with pytest.raises(SweepValidationError):
        load_sweep(_write(tmp_path, SWEEP_INI + "\n[QUADRATURE]\nGL_ORDER = 0\n"))


@pytest.mark.parametrize("number", [8, 9])
def test_single_receiver_presets_carry_the_jensen_bound(number):
    spec = load_sweep(figure_preset_path(number))
    assert "upper_bound" in spec.methods
    assert "new_scheme_ub" in spec.methods
