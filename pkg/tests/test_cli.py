# -*- coding: utf-8 -*-
import json
import math

import pytest

from apps.cli import main as cli_main
from apps.cli.registry import get_tools
from core.errors import QuadratureError
from core.sweep import runner

POINT = ["--nt", "2", "--nr", "1", "--kappa", "1", "--snr-db", "10"]

SWEEP_INI = """
[SWEEP]
VARIABLE = kappa
GRID = 0, 1, 10
METHODS = upper_bound, deterministic

[CHANNEL]
N_T = 2
N_R = 1
SNR_DB = 10
"""


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def _ini(tmp_path, text=SWEEP_INI):
    path = tmp_path / "sweep.ini"
    path.write_text(text, encoding="utf-8")
    return path


def test_registry_entries_resolve():
    aliases = {t["alias"] for t in get_tools()}
    assert {"home", "bound", "capacity", "new-scheme", "sweep", "figure", "doctor"} <= aliases


def test_home_and_unknown_command():
    assert cli_main.main([]) == 0
    assert cli_main.main(["nope"]) == 2


def test_bound_json(capsys):
    assert cli_main.main(["bound", *POINT, "--json"]) == 0
    doc = _json(capsys)
    assert doc["meta"]["tool"] == "ricelab bound"
    assert doc["meta"]["inputs"]["n_t"] == 2
    assert doc["meta"]["run"]["quadrature"]["order"] == 64
    assert "monte_carlo" not in doc["meta"]["run"]
    ub = doc["results"]["upper_bound"]
    assert ub["value"] == pytest.approx(math.log(1 + 1.5 * 17 / 3) + math.log(1 + 0.5 * 13 / 3), rel=1e-12)
    assert ub["units"] == "nats"
    assert doc["waterfill"]["threshold"] == pytest.approx(2.0 / 3.0)
    assert "new_scheme_lb" in doc["results"]


def test_bound_bits_and_table(capsys):
    assert cli_main.main(["bound", *POINT, "--units", "bits"]) == 0
    assert "Closed forms" in capsys.readouterr().out


def test_bound_missing_channel_args(capsys):
    assert cli_main.main(["bound", "--nt", "2"]) == 2
    assert "--nr" in capsys.readouterr().err


def test_bound_reads_channel_from_config(tmp_path, capsys):
    path = _ini(tmp_path, "[CHANNEL]\nN_T = 2\nN_R = 1\nKAPPA = 1\nSNR_DB = 10\n")
    assert cli_main.main(["bound", "--config", str(path), "--kappa", "0", "--json"]) == 0
    doc = _json(capsys)
    assert doc["meta"]["inputs"]["kappa"] == 0.0
    assert doc["results"]["upper_bound"]["value"] == pytest.approx(2 * math.log1p(5.0), rel=1e-12)


def test_capacity_quadrature(capsys):
    argv = ["capacity", "--nt", "1", "--nr", "2", "--kappa", "1", "--snr-db", "0", "--method", "quad", "--json"]
    assert cli_main.main(argv) == 0
    doc = _json(capsys)
    assert doc["result"]["method"] == "quadrature"
    assert 0.0 < doc["result"]["value"] < math.log1p(2.0)


def test_capacity_quadrature_needs_single_antenna():
    argv = ["capacity", "--nt", "2", "--nr", "2", "--kappa", "1", "--snr-db", "0", "--method", "quad"]
    assert cli_main.main(argv) == 2


def test_capacity_monte_carlo(capsys):
    argv = ["capacity", "--nt", "2", "--nr", "2", "--kappa", "1", "--snr-db", "10",
            "--samples", "2000", "--seed", "3", "--json"]
    assert cli_main.main(argv) == 0
    doc = _json(capsys)
    assert doc["result"]["method"] == "monte_carlo"
    assert doc["monte_carlo"] == {"samples": 2000, "seed": 3, "shards": 4}
    assert doc["result"]["uncertainty"] > 0


def test_capacity_rejects_quad_with_other_covariance():
    argv = ["capacity", *POINT, "--method", "quad", "--covariance", "rician_weighted"]
    assert cli_main.main(argv) == 2


def test_new_scheme_json(capsys):
    argv = ["new-scheme", "--nt", "2", "--kappa", "1", "--snr-db", "10", "--samples", "2000", "--json"]
    assert cli_main.main(argv) == 0
    doc = _json(capsys)
    assert set(doc["results"]) == {"new_scheme_ub", "new_scheme_lb", "new_scheme_approx", "new_scheme_mc", "quad_m1"}
    assert doc["results"]["new_scheme_ub"]["value"] == pytest.approx(math.log(13.5), rel=1e-12)
    assert doc["meta"]["inputs"]["n_r"] == 1
    assert doc["meta"]["run"]["monte_carlo"]["samples"] == 2000
    assert doc["meta"]["versions"]["name"] == "rician-lab"


def test_sweep_writes_csv(tmp_path):
    out = tmp_path / "out.csv"
    assert cli_main.main(["sweep", "--config", str(_ini(tmp_path)), "--out", str(out)]) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "kappa,upper_bound_capacity,upper_bound_err,deterministic_capacity,deterministic_err"
    assert len(lines) == 4


def test_sweep_requires_config(capsys):
    assert cli_main.main(["sweep"]) == 2
    assert "--config" in capsys.readouterr().err


def test_sweep_validation_writes_nothing(tmp_path):
    out = tmp_path / "out.csv"
    argv = ["sweep", "--config", str(_ini(tmp_path)), "--method", "magic", "--out", str(out)]
    assert cli_main.main(argv) == 2
    assert not out.exists()


def test_sweep_partial_failure(tmp_path, monkeypatch):
    def broken(cfg, mc, rule):
        raise QuadratureError("no convergence", best_estimate=float("nan"))

    monkeypatch.setitem(runner.EVALUATORS, "deterministic", broken)
    out = tmp_path / "out.csv"
    assert cli_main.main(["sweep", "--config", str(_ini(tmp_path)), "--out", str(out)]) == 3
    rows = out.read_text(encoding="utf-8").splitlines()[1:]
    assert all(row.endswith("ERR,ERR") for row in rows)


def test_figure_unknown_number():
    assert cli_main.main(["figure", "10"]) == 2


def test_figure_four(tmp_path):
    out = tmp_path / "fig4.csv"
    assert cli_main.main(["figure", "4", "--out", str(out)]) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "series,n_r,quad_m1_capacity,quad_m1_err,upper_bound_capacity,upper_bound_err"
    assert len(lines) == 21


def test_figure_rejects_config(tmp_path):
    assert cli_main.main(["figure", "4", "--config", str(_ini(tmp_path))]) == 2


def test_doctor():
    assert cli_main.main(["doctor"]) == 0
