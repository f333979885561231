# -*- coding: utf-8 -*-
"""Error hierarchy shared by the capacity modules."""

from __future__ import annotations

from typing import Optional


class CapacityLabError(Exception):
    """Base class for every error raised by `core`."""


class DomainError(CapacityLabError, ValueError):
    """Argument outside the mathematical domain (negative order, non-PD matrix, ...)."""


class EigenConvergenceError(CapacityLabError, RuntimeError):
    def __init__(self, message: str, *, sweeps: int, off_norm: float):
        super().__init__(message)
        self.sweeps = int(sweeps)
        self.off_norm = float(off_norm)


class QuadratureError(CapacityLabError, RuntimeError):
    """Integration did not reach its tolerance; keeps the best estimate."""

    def __init__(self, message: str, *, best_estimate: float, error_estimate: Optional[float] = None):
        super().__init__(message)
        self.best_estimate = float(best_estimate)
        self.error_estimate = None if error_estimate is None else float(error_estimate)


class UnsupportedConfigurationError(CapacityLabError, ValueError):
    """Operation defined only for a subset of antenna configurations."""


class SweepValidationError(CapacityLabError, ValueError):
    """Invalid sweep description (grid, methods, units)."""


class OutputError(CapacityLabError, OSError):
    """Writing results failed; the message names the destination."""
