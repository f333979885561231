# -*- coding: utf-8 -*-
"""Quadrature over (0, ∞): Gauss–Laguerre with an adaptive QUADPACK fallback.

Usage:
    rule = QuadratureRule.gauss_laguerre(64)
    value, err = integrate_semiinfinite(lambda x: x**2 * np.exp(-x), rule)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np
from scipy import integrate, special

from core.errors import DomainError, QuadratureError

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

GAUSS_LAGUERRE = "gauss_laguerre"
ADAPTIVE = "adaptive"

DEFAULT_GL_ORDER = 64
DEFAULT_FALLBACK_TOLERANCE = 1e-7
DEFAULT_ADAPTIVE_TOLERANCE = 1e-10
ADAPTIVE_LIMIT = 500
# a scaled bump stays on Gauss–Laguerre only with RESOLVE_NODES nodes inside
# center ± RESOLVE_WIDTHS·width and center + RESOLVE_REACH·width below the last node
RESOLVE_NODES = 8
RESOLVE_WIDTHS = 4.0
RESOLVE_REACH = 8.0


@lru_cache(maxsize=16)
def _laguerre_nodes(order: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = special.roots_laguerre(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """How to evaluate ∫₀^∞.

    gauss_laguerre rules carry their nodes/weights (weight function e^{-x})
    and, unless ``fallback_tolerance`` is None, hand over to the adaptive rule
    when the order vs 1.5×order difference exceeds it.
    """

    kind: str
    order: int = 0
    tolerance: float = DEFAULT_ADAPTIVE_TOLERANCE
    fallback_tolerance: Optional[float] = None
    nodes: np.ndarray = field(default_factory=lambda: np.empty(0))
    weights: np.ndarray = field(default_factory=lambda: np.empty(0))

    def __post_init__(self) -> None:
        if self.kind == GAUSS_LAGUERRE:
            if self.order < 1:
                raise DomainError(f"Gauss-Laguerre order must be positive, got {self.order}")
            if np.any(self.weights <= 0):
                raise DomainError("Gauss-Laguerre weights must be positive")
            if np.any(np.diff(self.nodes) <= 0):
                raise DomainError("Gauss-Laguerre nodes must be strictly increasing")
            if abs(float(np.sum(self.weights)) - 1.0) > 1e-12:
                raise DomainError("Gauss-Laguerre weights must sum to 1")
            if self.fallback_tolerance is not None and not self.fallback_tolerance > 0:
                raise DomainError("fallback tolerance must be positive")
        elif self.kind != ADAPTIVE:
            raise DomainError(f"unknown quadrature kind: {self.kind!r}")
        if not (0.0 < self.tolerance <= 1e-2):
            raise DomainError(f"adaptive tolerance must be in (0, 1e-2], got {self.tolerance}")

    @classmethod
    def gauss_laguerre(
        cls,
        order: int = DEFAULT_GL_ORDER,
        *,
        fallback_tolerance: Optional[float] = DEFAULT_FALLBACK_TOLERANCE,
        adaptive_tolerance: float = DEFAULT_ADAPTIVE_TOLERANCE,
    ) -> "QuadratureRule":
        nodes, weights = _laguerre_nodes(int(order))
        return cls(
            kind=GAUSS_LAGUERRE,
            order=int(order),
            tolerance=float(adaptive_tolerance),
            fallback_tolerance=fallback_tolerance,
            nodes=nodes,
            weights=weights,
        )

    @classmethod
    def adaptive(cls, tolerance: float = DEFAULT_ADAPTIVE_TOLERANCE) -> "QuadratureRule":
        return cls(kind=ADAPTIVE, tolerance=float(tolerance))

    @property
    def companion_order(self) -> int:
        return int(round(1.5 * self.order))


def default_rule(
    gl_order: int = DEFAULT_GL_ORDER,
    fallback_tolerance: float = DEFAULT_FALLBACK_TOLERANCE,
    adaptive_tolerance: float = DEFAULT_ADAPTIVE_TOLERANCE,
) -> QuadratureRule:
    return QuadratureRule.gauss_laguerre(
        gl_order, fallback_tolerance=fallback_tolerance, adaptive_tolerance=adaptive_tolerance
    )


def _gl_sum(f: Integrand, order: int, weighted: bool) -> float:
    nodes, weights = _laguerre_nodes(order)
    vals = np.asarray(f(nodes), dtype=np.float64)
    if weighted:
        return float(np.sum(weights * vals))
    # f carries its own e^{-x}; factor it back out of the weights
    return float(np.sum(weights * np.exp(nodes) * vals))


def resolves_scale(order: int, scale: Tuple[float, float]) -> bool:
    """True when the order-``order`` Gauss–Laguerre nodes cover a bump at ``scale``."""
    nodes, _ = _laguerre_nodes(int(order))
    center, width = float(scale[0]), max(float(scale[1]), 0.0)
    if center + RESOLVE_REACH * width > nodes[-1]:
        return False
    lo, hi = center - RESOLVE_WIDTHS * width, center + RESOLVE_WIDTHS * width
    inside = int(np.count_nonzero((nodes >= lo) & (nodes <= hi)))
    return inside >= RESOLVE_NODES


def _quad(h: Callable[[float], float], a: float, b: float, tol: float, points=None) -> Tuple[float, float]:
    kwargs = {"epsabs": tol, "epsrel": tol, "limit": ADAPTIVE_LIMIT, "full_output": 1}
    if points:
        kwargs["points"] = points
    result = integrate.quad(h, a, b, **kwargs)
    value, err = float(result[0]), float(result[1])
    if len(result) > 3 and err > 1e3 * tol * max(1.0, abs(value)):
        raise QuadratureError(
            f"adaptive quadrature on [{a}, {b}] did not converge: {result[3]}",
            best_estimate=value,
            error_estimate=err,
        )
    return value, err


def _adaptive(
    f: Integrand, tol: float, weighted: bool, scale: Optional[Tuple[float, float]]
) -> Tuple[float, float]:
    if weighted:
        def h(x: float) -> float:
            return float(np.asarray(f(np.asarray(x, dtype=np.float64)))) * float(np.exp(-x))
    else:
        def h(x: float) -> float:
            return float(np.asarray(f(np.asarray(x, dtype=np.float64))))

    if scale is None:
        return _quad(h, 0.0, np.inf, tol)

    center, width = float(scale[0]), max(float(scale[1]), 1e-12)
    split = center + 40.0 * width
    points = sorted({p for p in (center - 6.0 * width, center, center + 6.0 * width) if 0.0 < p < split})
    head, head_err = _quad(h, 0.0, split, tol, points or None)
    tail, tail_err = _quad(h, split, np.inf, tol)
    return head + tail, head_err + tail_err


def integrate_semiinfinite(
    f: Integrand,
    rule: QuadratureRule,
    *,
    weighted: bool = False,
    scale: Optional[Tuple[float, float]] = None,
) -> Tuple[float, float]:
    """Estimate ∫₀^∞ f(x) dx and return ``(value, error_estimate)``.

    ``weighted=True`` means f is given with the e^{-x} factor already removed
    (the true integrand is f(x)·e^{-x}). ``scale=(center, width)`` locates a
    concentrated integrand. A Gauss–Laguerre rule whose nodes do not resolve
    that bump is bypassed for the adaptive rule. f must accept ndarrays.
    """
    if rule.kind == ADAPTIVE:
        return _adaptive(f, rule.tolerance, weighted, scale)
    if scale is not None and not resolves_scale(rule.order, scale):
        logger.debug(
            "gauss-laguerre order %d cannot resolve center=%.4g width=%.3g, using adaptive",
            rule.order, float(scale[0]), float(scale[1]),
        )
        return _adaptive(f, rule.tolerance, weighted, scale)

    with np.errstate(over="ignore", invalid="ignore"):
        value = _gl_sum(f, rule.order, weighted)
        check = _gl_sum(f, rule.companion_order, weighted)
    err = abs(check - value)
    if not np.isfinite(err) or (rule.fallback_tolerance is not None and err > rule.fallback_tolerance):
        if rule.fallback_tolerance is None:
            raise QuadratureError(
                f"Gauss-Laguerre order {rule.order} produced a non-finite estimate",
                best_estimate=value if np.isfinite(value) else float("nan"),
            )
        logger.debug("gauss-laguerre diff %.3e above %.1e, switching to adaptive", err, rule.fallback_tolerance)
        return _adaptive(f, rule.tolerance, weighted, scale)
    # the companion rule is the more accurate of the pair
    return check, err
