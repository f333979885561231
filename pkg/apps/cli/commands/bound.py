#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""ricelab bound: every closed-form capacity expression at one channel point."""

from __future__ import annotations

import argparse
from typing import List, Optional

from rich.panel import Panel

from apps.cli.cli_common import (
    EXIT_OK,
    add_channel_args,
    add_output_args,
    add_run_args,
    channel_from_args,
    channel_inputs,
    console,
    estimate_table,
    guarded,
    load_defaults,
    setup_logging,
    write_json,
)
from core.bounds import bound_report, waterfill_allocation

LABELS = {
    "upper_bound": "Jensen upper bound (water-filled)",
    "deterministic": "deterministic channel, κ → ∞",
    "asymptotic": "large-N_T asymptote",
    "new_scheme_ub": "Q^κ upper bound",
    "new_scheme_lb": "Q^κ lower bound",
    "new_scheme_approx": "Q^κ large-κ approximation",
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ricelab bound", description="Closed-form capacity bounds at one point")
    add_channel_args(p)
    add_run_args(p)
    add_output_args(p)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    def run() -> int:
        defaults = load_defaults(args)
        cfg = channel_from_args(args)
        report = bound_report(cfg, defaults.rule)
        alloc = waterfill_allocation(cfg)

        if args.json:
            payload = {
                "units": defaults.units,
                "waterfill": {"diagonal": list(alloc.diagonal), "threshold": alloc.threshold},
                "results": {name: est.to_dict(defaults.units) for name, est in report.items()},
            }
            write_json("ricelab bound", channel_inputs(cfg, args.snr_db), payload, args.out, defaults=defaults)
            return EXIT_OK

        head = f"N_T={cfg.n_t}  N_R={cfg.n_r}  κ={cfg.kappa:g}  P={cfg.power:g}"
        console.print(Panel(f"[bold cyan]Capacity bounds[/bold cyan]\n{head}", border_style="cyan"))
        rows = [(LABELS.get(name, name), est) for name, est in report.items()]
        console.print(estimate_table("Closed forms", rows, defaults.units))
        diag = ", ".join(f"{v:.4g}" for v in alloc.diagonal)
        console.print(f"[dim]water-fill diagonal: [{diag}]  θ={alloc.threshold:.4g}[/dim]")
        return EXIT_OK

    return guarded(run)


if __name__ == "__main__":
    raise SystemExit(main())
