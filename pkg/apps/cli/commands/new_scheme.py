#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""ricelab new-scheme: the Rician-weighted covariance Q^κ at one receive antenna."""

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
from core.bounds import new_scheme_large_kappa_approx, new_scheme_lower_bound, new_scheme_upper_bound
from core.estimators import mc_new_scheme_capacity, mc_new_scheme_moments, quadrature_capacity_m1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ricelab new-scheme", description="Q^κ bounds and capacity (N_R = 1)")
    add_channel_args(p)
    p.add_argument("--moments", action="store_true", help="also check E W and E|Z|² on the sampler")
    add_run_args(p)
    add_output_args(p)
    p.set_defaults(nr=1)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    def run() -> int:
        defaults = load_defaults(args)
        cfg = channel_from_args(args)
        rows = [
            ("upper bound", new_scheme_upper_bound(cfg)),
            ("lower bound", new_scheme_lower_bound(cfg, defaults.rule)),
            ("large-κ approximation", new_scheme_large_kappa_approx(cfg)),
            ("Monte Carlo, Q^κ", mc_new_scheme_capacity(cfg, defaults.mc)),
            ("scaled identity, Q⁰", quadrature_capacity_m1(cfg, defaults.rule)),
        ]
        moments = mc_new_scheme_moments(cfg, defaults.mc) if args.moments else None

        if args.json:
            keys = ("new_scheme_ub", "new_scheme_lb", "new_scheme_approx", "new_scheme_mc", "quad_m1")
            payload = {
                "units": defaults.units,
                "results": {k: est.to_dict(defaults.units) for k, (_, est) in zip(keys, rows)},
            }
            if moments is not None:
                payload["moments"] = {
                    "mean_w": moments.mean_w,
                    "expected_w": moments.expected_w,
                    "mean_z_sq": moments.mean_z_sq,
                    "expected_z_sq": moments.expected_z_sq,
                    "within_4_sigma": moments.within(),
                }
            write_json(
                "ricelab new-scheme", channel_inputs(cfg, args.snr_db), payload, args.out,
                defaults=defaults, with_mc=True,
            )
            return EXIT_OK

        head = f"N_T={cfg.n_t}  N_R=1  κ={cfg.kappa:g}  P={cfg.power:g}"
        console.print(Panel(f"[bold cyan]Rician-weighted covariance[/bold cyan]\n{head}", border_style="cyan"))
        console.print(estimate_table("Q^κ", rows, defaults.units))
        if moments is not None:
            flag = "[green]ok[/green]" if moments.within() else "[yellow]off[/yellow]"
            console.print(
                f"[dim]E W={moments.mean_w:.4f} (expect {moments.expected_w:g}), "
                f"E|Z|²={moments.mean_z_sq:.4f} (expect {moments.expected_z_sq:.4f})[/dim] {flag}"
            )
        return EXIT_OK

    return guarded(run)


if __name__ == "__main__":
    raise SystemExit(main())
