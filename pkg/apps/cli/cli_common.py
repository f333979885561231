# -*- coding: utf-8 -*-
"""Shared helpers for CLI tools: paths, flags, logging, output."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from core.channel import ChannelConfig, db_to_linear
from core.config import ConfigLoader
from core.errors import CapacityLabError, EigenConvergenceError, QuadratureError, SweepValidationError
from core.estimate import UNITS, CapacityEstimate
from core.schemas.meta import build_meta
from core.sweep import RunDefaults

PROJECT_ROOT = Path(__file__).resolve().parents[2]
CONF_DIR = PROJECT_ROOT / "conf"
SETTINGS_PATH = CONF_DIR / "settings.ini"
FIGURES_DIR = CONF_DIR / "figures"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARTIAL = 3

console = Console()
err_console = Console(stderr=True)


def setup_logging(verbose: int = 0) -> None:
    level = logging.DEBUG if verbose >= 2 else logging.INFO if verbose == 1 else logging.WARNING
    root = logging.getLogger()
    for handler in list(root.handlers):
        if isinstance(handler, RichHandler):
            root.removeHandler(handler)
    root.addHandler(RichHandler(console=err_console, show_path=False, rich_tracebacks=False))
    root.setLevel(level)


def fail(message: str, code: int = EXIT_USAGE) -> int:
    err_console.print(f"[red]ERR:[/red] {escape(message)}", highlight=False)
    return code


# ---------------------------------------------------------------- arguments


def add_channel_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("channel")
    g.add_argument("--nt", type=int, help="transmit antennas N_T")
    g.add_argument("--nr", type=int, help="receive antennas N_R")
    g.add_argument("--kappa", type=float, help="Rician factor (linear)")
    g.add_argument("--snr-db", type=float, dest="snr_db", help="total transmit power P in dB")


def add_run_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("run")
    g.add_argument("--samples", type=int, help="Monte Carlo draws (default from conf/settings.ini)")
    g.add_argument("--seed", type=int, help="Monte Carlo seed")
    g.add_argument("--shards", type=int, help="Monte Carlo shards (independent streams)")
    g.add_argument("--units", choices=UNITS, help="output units (default nats)")
    g.add_argument("--config", help="ini file with [CHANNEL]/[MONTE_CARLO]/[QUADRATURE] or a sweep")
    g.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug logging")


def add_output_args(p: argparse.ArgumentParser, *, json_flag: bool = True) -> None:
    p.add_argument("--out", help="write to this path instead of stdout")
    if json_flag:
        p.add_argument("--json", action="store_true", help="print JSON with a metadata block")


# ---------------------------------------------------------------- resolution


def load_defaults(args: argparse.Namespace, *, include_config: bool = True) -> RunDefaults:
    """settings.ini, then --config (if it carries run sections), then flags."""
    settings = ConfigLoader(SETTINGS_PATH) if SETTINGS_PATH.exists() else None
    defaults = RunDefaults.from_settings(settings)
    if include_config and getattr(args, "config", None):
        extra = ConfigLoader(args.config)
        if any(s in extra.sections() for s in ("MONTE_CARLO", "QUADRATURE", "OUTPUT")):
            defaults = RunDefaults.from_settings(_layered(settings, extra))
    return defaults.with_overrides(
        samples=getattr(args, "samples", None),
        seed=getattr(args, "seed", None),
        shards=getattr(args, "shards", None),
        units=getattr(args, "units", None),
    )


def _layered(base: Optional[ConfigLoader], top: ConfigLoader) -> ConfigLoader:
    if base is None:
        return top
    for section in top.sections():
        if not base.config.has_section(section):
            base.config.add_section(section)
        for key, value in top.config.items(section):
            base.config.set(section, key, value)
    return base


def channel_from_args(args: argparse.Namespace) -> ChannelConfig:
    """Flags win over the [CHANNEL] section of --config."""
    values: Dict[str, Optional[float]] = {"nt": args.nt, "nr": args.nr, "kappa": args.kappa, "snr_db": args.snr_db}
    if getattr(args, "config", None):
        cfg = ConfigLoader(args.config)
        for flag, key in (("nt", "N_T"), ("nr", "N_R"), ("kappa", "KAPPA"), ("snr_db", "SNR_DB")):
            if values[flag] is None:
                values[flag] = cfg.get_float("CHANNEL", key)
    missing = [f"--{k.replace('_', '-')}" for k, v in values.items() if v is None]
    if missing:
        raise SweepValidationError(f"missing channel parameters: {', '.join(missing)}")
    return ChannelConfig(
        n_t=values["nt"],
        n_r=values["nr"],
        kappa=values["kappa"],
        power=db_to_linear(values["snr_db"]),
    )


def channel_inputs(cfg: ChannelConfig, snr_db: Optional[float]) -> Dict[str, Any]:
    return {"n_t": cfg.n_t, "n_r": cfg.n_r, "kappa": cfg.kappa, "power": cfg.power, "snr_db": snr_db}


# ---------------------------------------------------------------- output


def estimate_table(title: str, rows: List[Tuple[str, CapacityEstimate]], units: str) -> Table:
    table = Table(title=title, box=None, show_header=True, header_style="bold cyan")
    table.add_column("Quantity", style="bold")
    table.add_column(f"Capacity [{units}]", justify="right")
    table.add_column("± (half-width / error)", justify="right", style="dim")
    table.add_column("Method", style="green")
    for name, est in rows:
        value, err = est.in_units(units)
        table.add_row(name, f"{value:.6f}", f"{err:.2e}" if err else "-", est.method)
    return table


def write_json(
    tool: str,
    inputs: Dict[str, Any],
    payload: Dict[str, Any],
    out: Optional[str],
    *,
    defaults: Optional[RunDefaults] = None,
    with_mc: bool = False,
) -> None:
    meta = build_meta(
        tool=tool,
        inputs=inputs,
        rule=defaults.rule if defaults else None,
        mc=defaults.mc if defaults and with_mc else None,
    )
    doc = {"meta": meta, **payload}
    text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if out:
        Path(out).expanduser().write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def guarded(fn) -> int:
    """Run a command body, mapping library errors to exit codes."""
    try:
        return fn()
    except (QuadratureError, EigenConvergenceError) as exc:
        return fail(str(exc), EXIT_PARTIAL)
    except (CapacityLabError, FileNotFoundError, ValueError) as exc:
        return fail(str(exc))
