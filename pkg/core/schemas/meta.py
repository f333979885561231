# -*- coding: utf-8 -*-
"""``meta`` block of the JSON documents written by the CLI.

    {"schema": 1, "generated": "...", "tool": "ricelab bound",
     "versions": {"name": "rician-lab", "project": "v0.3.0", "numpy": ..., "scipy": ...},
     "internal_units": "nats", "inputs": {...}, "run": {...}}

``run`` records the quadrature rule and Monte Carlo stream behind a result.
"""

from __future__ import annotations

from datetime import datetime, timezone
from typing import Any, Dict, Optional

from core.estimate import NATS
from core.estimators import MonteCarloSpec
from core.special import QuadratureRule
from core.version import version_info


def now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def rule_meta(rule: QuadratureRule) -> Dict[str, Any]:
    out: Dict[str, Any] = {"kind": rule.kind, "adaptive_tolerance": rule.tolerance}
    if rule.order:
        out.update(order=rule.order, companion_order=rule.companion_order, fallback_tolerance=rule.fallback_tolerance)
    return out


def mc_meta(spec: MonteCarloSpec) -> Dict[str, Any]:
    return {"samples": spec.samples, "seed": spec.seed, "shards": spec.shards, "confidence": spec.confidence}


def build_meta(
    *,
    tool: str,
    inputs: Optional[Dict[str, Any]] = None,
    rule: Optional[QuadratureRule] = None,
    mc: Optional[MonteCarloSpec] = None,
) -> Dict[str, Any]:
    info = version_info()
    meta: Dict[str, Any] = {
        "schema": info.schema,
        "generated": now_iso(),
        "tool": str(tool),
        "versions": info.as_dict(),
        "internal_units": NATS,
    }
    if inputs:
        meta["inputs"] = dict(inputs)
    run: Dict[str, Any] = {}
    if rule is not None:
        run["quadrature"] = rule_meta(rule)
    if mc is not None:
        run["monte_carlo"] = mc_meta(mc)
    if run:
        meta["run"] = run
    return meta
