#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""ricelab doctor: environment and configuration health check."""

from __future__ import annotations

import argparse
import platform
from importlib import metadata
from typing import List, Optional, Tuple

from rich.panel import Panel
from rich.table import Table

from apps.cli.cli_common import EXIT_OK, EXIT_USAGE, PROJECT_ROOT, SETTINGS_PATH, console
from core.config import ConfigLoader
from core.errors import CapacityLabError
from core.sweep import FIGURE_NUMBERS, RunDefaults, figure_preset_path, load_sweep
from core.version import project_version

PACKAGES = ("numpy", "scipy", "rich", "pytest")
REQUIRED = ("numpy", "scipy")


def _status(level: str) -> str:
    if level == "PASS":
        return "[green]PASS[/green]"
    if level == "WARN":
        return "[yellow]WARN[/yellow]"
    return "[red]FAIL[/red]"


def _package_rows() -> List[Tuple[str, str, str]]:
    rows = []
    for name in PACKAGES:
        try:
            rows.append((name, "PASS", metadata.version(name)))
        except metadata.PackageNotFoundError:
            rows.append((name, "FAIL" if name in REQUIRED else "WARN", "not installed"))
    return rows


def _config_rows() -> List[Tuple[str, str, str]]:
    rows = []
    defaults = None
    try:
        defaults = RunDefaults.from_settings(ConfigLoader(SETTINGS_PATH))
        mc = defaults.mc
        rows.append(("conf/settings.ini", "PASS", f"samples={mc.samples} shards={mc.shards} units={defaults.units}"))
    except (CapacityLabError, FileNotFoundError, ValueError) as exc:
        rows.append(("conf/settings.ini", "WARN", str(exc)))
    for number in FIGURE_NUMBERS:
        path = figure_preset_path(number)
        try:
            spec = load_sweep(path, defaults=defaults)
            detail = f"{spec.variable} x{len(spec.grid)}, {len(spec.curves())} series, {', '.join(spec.methods)}"
            rows.append((f"figure {number}", "PASS", detail))
        except CapacityLabError as exc:
            rows.append((f"figure {number}", "FAIL", str(exc)))
    return rows


def main(argv: Optional[List[str]] = None) -> int:
    p = argparse.ArgumentParser(prog="ricelab doctor", description="Environment and configuration health check")
    p.add_argument("--enforce", action="store_true", help="exit non-zero on failures (CI)")
    args = p.parse_args(argv)

    console.print(Panel(
        f"[bold cyan]ricelab doctor[/bold cyan]\nPython {platform.python_version()} | rician-lab {project_version()}",
        border_style="cyan",
    ))
    table = Table(title="Health Checks", box=None, show_header=True, header_style="bold cyan")
    table.add_column("Check", style="bold")
    table.add_column("Status", justify="center")
    table.add_column("Details", style="dim")

    fail = warn = 0
    for name, level, detail in _package_rows() + _config_rows():
        table.add_row(name, _status(level), detail)
        fail += level == "FAIL"
        warn += level == "WARN"

    console.print(table)
    console.print(f"[dim]Root: {PROJECT_ROOT} | Summary: FAIL={fail}, WARN={warn}[/dim]")
    if args.enforce and fail:
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
