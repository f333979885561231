#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""ricelab sweep: run a sweep file and write CSV."""

from __future__ import annotations

import argparse
import logging
from typing import List, Optional

from apps.cli.cli_common import (
    EXIT_OK,
    EXIT_PARTIAL,
    add_channel_args,
    add_output_args,
    add_run_args,
    err_console,
    fail,
    guarded,
    load_defaults,
    setup_logging,
)
from core.sweep import emit_csv, load_sweep, run_sweep

logger = logging.getLogger(__name__)


def add_sweep_args(p: argparse.ArgumentParser) -> None:
    add_channel_args(p)
    p.add_argument("--method", action="append", dest="methods", help="replace the file's METHODS (repeatable)")
    p.add_argument("--workers", type=int, default=1, help="grid points evaluated concurrently")
    add_run_args(p)
    add_output_args(p, json_flag=False)


def run_sweep_file(path, args: argparse.Namespace) -> int:
    """Shared by `sweep` and `figure`: nothing is written unless validation passes."""
    defaults = load_defaults(args, include_config=False)
    spec = load_sweep(
        path,
        defaults=defaults,
        channel_overrides={"n_t": args.nt, "n_r": args.nr, "kappa": args.kappa, "snr_db": args.snr_db},
        mc_overrides={"samples": args.samples, "seed": args.seed, "shards": args.shards},
        methods=args.methods,
        units=args.units,
    )
    rows = run_sweep(spec, workers=max(1, args.workers))
    emit_csv(rows, args.out)
    failed = sum(1 for r in rows if not r.ok)
    if failed:
        err_console.print(f"[yellow]WARN:[/yellow] {failed} of {len(rows)} rows carry ERR cells", highlight=False)
        return EXIT_PARTIAL
    if args.out:
        err_console.print(f"[dim]wrote {len(rows)} rows to {args.out}[/dim]", highlight=False)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    p = argparse.ArgumentParser(prog="ricelab sweep", description="Parameter sweep from an ini file, CSV out")
    add_sweep_args(p)
    args = p.parse_args(argv)
    setup_logging(args.verbose)
    if not args.config:
        return fail("sweep needs --config <file.ini> (see conf/figures/ for examples)")
    return guarded(lambda: run_sweep_file(args.config, args))


if __name__ == "__main__":
    raise SystemExit(main())
