#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""ricelab command registry."""

TOOLS = [
    {
        "file": "home.py",
        "alias": "home",
        "desc": "Command overview and version",
        "usage": "ricelab",
        "type": "Entry",
        "folder": "apps/cli/commands",
    },
    {
        "file": "bound.py",
        "alias": "bound",
        "desc": "Closed-form bounds at one channel point",
        "usage": "ricelab bound --nt 2 --nr 1 --kappa 1 --snr-db 10 [--json]",
        "type": "Query",
        "folder": "apps/cli/commands",
    },
    {
        "file": "capacity.py",
        "alias": "capacity",
        "desc": "Ergodic capacity by Monte Carlo or quadrature",
        "usage": "ricelab capacity --nt 1 --nr 4 --kappa 10 --snr-db 0 [--method auto|mc|quad] [--covariance ...]",
        "type": "Query",
        "folder": "apps/cli/commands",
    },
    {
        "file": "new_scheme.py",
        "alias": "new-scheme",
        "desc": "Rician-weighted covariance at N_R = 1: bounds, approximation, Monte Carlo",
        "usage": "ricelab new-scheme --nt 8 --kappa 10 --snr-db 10 [--moments]",
        "type": "Query",
        "folder": "apps/cli/commands",
    },
    {
        "file": "sweep.py",
        "alias": "sweep",
        "desc": "Parameter sweep from an ini file, CSV out",
        "usage": "ricelab sweep --config my_sweep.ini [--out sweep.csv] [--units bits]",
        "type": "Sweep",
        "folder": "apps/cli/commands",
    },
    {
        "file": "figure.py",
        "alias": "figure",
        "desc": "Reproduce a committed figure preset (1-9) as CSV",
        "usage": "ricelab figure 8 [--samples 50000] [--out fig8.csv]",
        "type": "Sweep",
        "folder": "apps/cli/commands",
    },
    {
        "file": "doctor.py",
        "alias": "doctor",
        "desc": "Environment and configuration health check",
        "usage": "ricelab doctor [--enforce]",
        "type": "Health",
        "folder": "apps/cli/commands",
    },
]


def get_tools():
    return TOOLS
