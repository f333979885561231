# -*- coding: utf-8 -*-
"""Parameter sweeps and their CSV output."""

from core.sweep.config import FIGURE_NUMBERS, RunDefaults, figure_preset_path, load_sweep
from core.sweep.csvout import ERROR_MARKER, emit_csv, render_csv
from core.sweep.runner import EVALUATORS, run_sweep
from core.sweep.spec import METHODS, VARIABLES, SeriesSpec, SweepRow, SweepSpec, grid_from_range

__all__ = [
    "ERROR_MARKER",
    "EVALUATORS",
    "FIGURE_NUMBERS",
    "METHODS",
    "VARIABLES",
    "RunDefaults",
    "SeriesSpec",
    "SweepRow",
    "SweepSpec",
    "emit_csv",
    "figure_preset_path",
    "grid_from_range",
    "load_sweep",
    "render_csv",
    "run_sweep",
]
