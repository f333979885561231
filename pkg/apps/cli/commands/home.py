#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""ricelab with no command: version panel and the command list."""

from __future__ import annotations

from typing import List, Optional

from rich import box
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from apps.cli.cli_common import EXIT_OK, console
from apps.cli.registry import get_tools
from core.version import versions


def render_tools(unknown: Optional[str] = None) -> None:
    table = Table(title="Commands", box=box.MINIMAL, show_header=True, header_style="bold cyan")
    table.add_column("Group", style="bold", no_wrap=True)
    table.add_column("Command", style="bold", no_wrap=True)
    table.add_column("Details", ratio=1)

    last_group = None
    for tool in get_tools():
        if tool.get("alias") == "home":
            continue
        group = tool.get("type", "Other")
        details = Text(tool.get("desc", "-"))
        if tool.get("usage"):
            details.append("\n")
            details.append(tool["usage"], style="dim")
        table.add_row(group if group != last_group else "", f"ricelab {tool['alias']}", details)
        last_group = group

    if unknown:
        console.print(f"[yellow]unknown command:[/yellow] {unknown}")
    console.print(table)


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(argv or [])
    ver = versions()
    console.print(Panel(
        f"[bold cyan]{ver['name']}[/bold cyan] {ver['project']} (schema {ver['schema']}) | numpy {ver['numpy']} | scipy {ver['scipy']}\n"
        "Ergodic capacity of Rician MIMO channels: bounds, quadrature, Monte Carlo, sweeps.",
        border_style="cyan",
    ))
    render_tools(argv[0] if argv else None)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
