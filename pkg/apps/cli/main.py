#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Unified CLI dispatcher for rician-lab (`ricelab <command> ...`)."""

from __future__ import annotations

import importlib
import sys
from pathlib import Path
from typing import List, Optional, Tuple

PROJECT_ROOT = Path(__file__).resolve().parents[2]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))


def _module_name(tool: dict) -> str:
    folder = (tool.get("folder") or "apps/cli/commands").strip("/").replace("/", ".")
    return f"{folder}.{Path(str(tool.get('file'))).stem}"


def _resolve_tool(alias: Optional[str]) -> Tuple[str, List[str]]:
    from apps.cli.registry import get_tools

    tools = get_tools()
    home = next((t for t in tools if t.get("alias") == "home"), None)
    default = _module_name(home) if home else "apps.cli.commands.home"

    key = str(alias or "").strip()
    if not key:
        return default, []

    for tool in tools:
        if tool.get("alias") == key or tool.get("file") == key:
            return _module_name(tool), []

    # unknown alias: show the overview and name the typo
    return default, [key]


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(argv) if argv is not None else list(sys.argv[1:])
    alias = argv[0] if argv else None
    module_name, injected = _resolve_tool(alias)
    rest = injected if injected else argv[1:]

    module = importlib.import_module(module_name)
    code = module.main(rest)
    if injected:
        return 2
    return int(code or 0)


if __name__ == "__main__":
    raise SystemExit(main())
