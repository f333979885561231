# -*- coding: utf-8 -*-
"""CapacityEstimate: one capacity value with its uncertainty, in nats."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Tuple

from core.errors import DomainError

CLOSED_FORM = "closed_form"
QUADRATURE = "quadrature"
MONTE_CARLO = "monte_carlo"
METHOD_KINDS = (CLOSED_FORM, QUADRATURE, MONTE_CARLO)

NATS = "nats"
BITS = "bits"
UNITS = (NATS, BITS)

# quadrature of a nonnegative integrand may land a hair below zero
_NEGATIVE_SLACK = 1e-12


def nats_to(value: float, units: str) -> float:
    if units == NATS:
        return value
    if units == BITS:
        return value / math.log(2.0)
    raise DomainError(f"unknown units {units!r}, expected one of {UNITS}")


@dataclass(frozen=True)
class CapacityEstimate:
    """Capacity in nats per channel use.

    ``uncertainty`` is the confidence half-width for Monte Carlo, the error
    estimate for quadrature and 0 for closed forms. ``std_error`` is the
    Monte Carlo standard error (0 otherwise).
    """

    nats: float
    uncertainty: float
    method: str
    std_error: float = 0.0

    def __post_init__(self) -> None:
        if self.method not in METHOD_KINDS:
            raise DomainError(f"unknown estimate method {self.method!r}")
        nats = float(self.nats)
        if math.isnan(nats) or nats < -_NEGATIVE_SLACK:
            raise DomainError(f"capacity must be >= 0, got {self.nats!r}")
        object.__setattr__(self, "nats", max(nats, 0.0))
        if not float(self.uncertainty) >= 0:
            raise DomainError(f"uncertainty must be >= 0, got {self.uncertainty!r}")
        if self.method == CLOSED_FORM and self.uncertainty != 0:
            raise DomainError("closed-form estimates carry no uncertainty")
        object.__setattr__(self, "uncertainty", float(self.uncertainty))
        object.__setattr__(self, "std_error", float(self.std_error))

    @classmethod
    def closed_form(cls, nats: float) -> "CapacityEstimate":
        return cls(nats=nats, uncertainty=0.0, method=CLOSED_FORM)

    def in_units(self, units: str) -> Tuple[float, float]:
        return nats_to(self.nats, units), nats_to(self.uncertainty, units)

    def to_dict(self, units: str = NATS) -> Dict[str, object]:
        value, err = self.in_units(units)
        return {"value": value, "uncertainty": err, "units": units, "method": self.method}
