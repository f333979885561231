#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""ricelab figure N: run the committed preset conf/figures/figureN.ini."""

from __future__ import annotations

import argparse
from typing import List, Optional

from apps.cli.cli_common import fail, guarded, setup_logging
from apps.cli.commands.sweep import add_sweep_args, run_sweep_file
from core.sweep import FIGURE_NUMBERS, figure_preset_path


def main(argv: Optional[List[str]] = None) -> int:
    p = argparse.ArgumentParser(prog="ricelab figure", description="Reproduce one of the figure presets as CSV")
    p.add_argument("number", type=int, help=f"preset number {FIGURE_NUMBERS[0]}..{FIGURE_NUMBERS[-1]}")
    add_sweep_args(p)
    args = p.parse_args(argv)
    setup_logging(args.verbose)
    if args.config:
        return fail("figure presets are fixed files; use `ricelab sweep --config` for custom sweeps")
    return guarded(lambda: run_sweep_file(figure_preset_path(args.number), args))


if __name__ == "__main__":
    raise SystemExit(main())
