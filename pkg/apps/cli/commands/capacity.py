#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""ricelab capacity: ergodic capacity at one point by Monte Carlo or quadrature."""

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
    fail,
    guarded,
    load_defaults,
    setup_logging,
    write_json,
)
from core.channel import awgn_covariance, rician_weighted, scaled_identity
from core.estimators import empirical_eigen_check, mc_ergodic_capacity, quadrature_capacity_m1

METHODS = ("auto", "mc", "quad")
COVARIANCES = {
    "scaled_identity": scaled_identity,
    "rician_weighted": rician_weighted,
    "awgn": awgn_covariance,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ricelab capacity", description="Ergodic capacity at one channel point")
    add_channel_args(p)
    p.add_argument("--method", choices=METHODS, default="auto", help="auto: quadrature when min(N_T,N_R)=1")
    p.add_argument("--covariance", choices=tuple(COVARIANCES), default="scaled_identity")
    p.add_argument("--eigen-check", action="store_true", help="KS fit of sampled W (min(N_T,N_R)=1 only)")
    add_run_args(p)
    add_output_args(p)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    def run() -> int:
        defaults = load_defaults(args)
        cfg = channel_from_args(args)
        method = args.method
        if method == "auto":
            method = "quad" if cfg.m == 1 and args.covariance == "scaled_identity" else "mc"
        if method == "quad" and args.covariance != "scaled_identity":
            return fail("quadrature evaluates the scaled identity covariance only; use --method mc")

        if method == "quad":
            est = quadrature_capacity_m1(cfg, defaults.rule)
        else:
            est = mc_ergodic_capacity(cfg, COVARIANCES[args.covariance](cfg), defaults.mc)
        fit = empirical_eigen_check(cfg, defaults.mc) if args.eigen_check else None

        if args.json:
            payload = {"units": defaults.units, "covariance": args.covariance, "result": est.to_dict(defaults.units)}
            if method == "mc":
                payload["monte_carlo"] = {"samples": defaults.mc.samples, "seed": defaults.mc.seed, "shards": defaults.mc.shards}
            if fit is not None:
                payload["eigen_check"] = {"ks": fit.statistic, "p_value": fit.p_value, "samples": fit.samples}
            write_json(
                "ricelab capacity", channel_inputs(cfg, args.snr_db), payload, args.out,
                defaults=defaults, with_mc=method == "mc" or fit is not None,
            )
            return EXIT_OK

        head = f"N_T={cfg.n_t}  N_R={cfg.n_r}  κ={cfg.kappa:g}  P={cfg.power:g}  Q={args.covariance}"
        console.print(Panel(f"[bold cyan]Ergodic capacity[/bold cyan]\n{head}", border_style="cyan"))
        console.print(estimate_table("Estimate", [(f"C ({method})", est)], defaults.units))
        if method == "mc":
            mc = defaults.mc
            console.print(f"[dim]samples={mc.samples} seed={mc.seed} shards={mc.shards} confidence={mc.confidence:g}[/dim]")
        if fit is not None:
            console.print(f"[dim]eigen check: KS={fit.statistic:.4f} p={fit.p_value:.3g} over {fit.samples} draws[/dim]")
        return EXIT_OK

    return guarded(run)


if __name__ == "__main__":
    raise SystemExit(main())
