# -*- coding: utf-8 -*-
"""Scalar special functions, all evaluated in the log domain.

log-gamma, complex multivariate gamma, modified Bessel I_ν, the scalar
reduction of ₀F̃₁ and the ψ correction factor of the scalar non-central
Wishart density.

Functions accept a float or an ndarray for their continuous argument and
return the same shape (a plain float for scalar input).
"""

from __future__ import annotations

import logging
import math
from typing import Union

import numpy as np
from scipy import special

from core.errors import DomainError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

# ive() results below this are subnormal or zero; switch to the log series.
_IVE_UNDERFLOW = 1e-280


def _as_output(values: np.ndarray, like: ArrayLike) -> ArrayLike:
    if np.ndim(like) == 0:
        return float(np.asarray(values).reshape(()))
    return values


def _check_nonneg(name: str, arr: np.ndarray) -> None:
    if np.any(np.isnan(arr)) or np.any(arr < 0):
        raise DomainError(f"{name} must be >= 0")


def log_gamma(x: ArrayLike) -> ArrayLike:
    """ln Γ(x) for x > 0."""
    arr = np.asarray(x, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any(arr <= 0):
        raise DomainError("log_gamma requires x > 0")
    return _as_output(special.gammaln(arr), x)


def log_multivariate_gamma(m: int, a: float) -> float:
    """ln Γ̃_m(a) = m(m-1)/2·ln π + Σ_{k=1..m} ln Γ(a-k+1), the complex multivariate gamma."""
    m = int(m)
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    if not a > m - 1:
        raise DomainError(f"log_multivariate_gamma requires a > m - 1 (m={m}, a={a})")
    ks = np.arange(m, dtype=np.float64)
    return float(0.5 * m * (m - 1) * math.log(math.pi) + np.sum(special.gammaln(a - ks)))


def _log_bessel_series(nu: float, x: np.ndarray) -> np.ndarray:
    terms = 60 + int(np.ceil(np.max(x))) if x.size else 60
    k = np.arange(terms, dtype=np.float64)[:, None]
    log_half = np.log(0.5 * x)[None, :]
    log_terms = (2.0 * k + nu) * log_half - special.gammaln(k + 1.0) - special.gammaln(k + nu + 1.0)
    return special.logsumexp(log_terms, axis=0)


def log_bessel_i(nu: float, x: ArrayLike) -> ArrayLike:
    """ln I_ν(x) for ν >= 0, x >= 0.

    Uses the exponentially scaled Bessel function (ln I_ν(x) = ln ive + x), so
    large arguments never overflow; where the scaled value underflows (small
    x against large ν) the power series is summed in the log domain.
    ln I_ν(0) is 0 for ν = 0 and -inf for ν > 0.
    """
    nu = float(nu)
    if not nu >= 0:
        raise DomainError(f"Bessel order must be >= 0, got {nu}")
    arr = np.asarray(x, dtype=np.float64)
    _check_nonneg("Bessel argument", arr)

    flat = np.atleast_1d(arr).ravel()
    out = np.empty_like(flat)
    zero = flat == 0.0
    out[zero] = 0.0 if nu == 0.0 else -np.inf

    pos = ~zero
    if np.any(pos):
        xp = flat[pos]
        scaled = special.ive(nu, xp)
        with np.errstate(divide="ignore"):
            vals = np.log(scaled) + xp
        under = ~(scaled > _IVE_UNDERFLOW) | ~np.isfinite(vals)
        if np.any(under):
            vals[under] = _log_bessel_series(nu, xp[under])
        out[pos] = vals
    return _as_output(out.reshape(arr.shape), x)


def hyp0f1_series(m: int, r_sq: ArrayLike, terms: int = 80) -> ArrayLike:
    """ln ₀F̃₁(m; r²) by its defining series Σ_k Γ(m) r^{2k} / (Γ(m+k) k!)."""
    m = int(m)
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    arr = np.asarray(r_sq, dtype=np.float64)
    _check_nonneg("r_sq", arr)

    flat = np.atleast_1d(arr).ravel()
    out = np.zeros_like(flat)
    pos = flat > 0
    if np.any(pos):
        rs = flat[pos]
        count = max(int(terms), int(4.0 * np.sqrt(np.max(rs))) + 40)
        k = np.arange(count, dtype=np.float64)[:, None]
        log_terms = (
            k * np.log(rs)[None, :]
            + special.gammaln(m)
            - special.gammaln(m + k)
            - special.gammaln(k + 1.0)
        )
        out[pos] = special.logsumexp(log_terms, axis=0)
    return _as_output(out.reshape(arr.shape), r_sq)


def hyp0f1_scalar(m: int, r_sq: ArrayLike) -> ArrayLike:
    """ln ₀F̃₁(m; r²) through its Bessel form Γ(m)·r^{-(m-1)}·I_{m-1}(2r)."""
    m = int(m)
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    arr = np.asarray(r_sq, dtype=np.float64)
    _check_nonneg("r_sq", arr)

    flat = np.atleast_1d(arr).ravel()
    out = np.zeros_like(flat)
    pos = flat > 0
    if np.any(pos):
        rs = flat[pos]
        out[pos] = (
            special.gammaln(m)
            - 0.5 * (m - 1) * np.log(rs)
            + np.asarray(log_bessel_i(m - 1, 2.0 * np.sqrt(rs)))
        )
    return _as_output(out.reshape(arr.shape), r_sq)


def log_psi_factor(w: ArrayLike, n: int, kappa: float) -> ArrayLike:
    """ln ψ(W, n) of the scalar non-central Wishart pdf.

    ψ = ((1+κ)e^{-κ})^n · e^{-κW} · ₀F̃₁(n; nκ(1+κ)W), which is the Bessel
    form with the W^{-(n-1)/2} factor absorbed into ₀F̃₁. Exactly 0 at κ = 0.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if not kappa >= 0:
        raise DomainError(f"kappa must be >= 0, got {kappa}")
    arr = np.asarray(w, dtype=np.float64)
    _check_nonneg("w", arr)
    if kappa == 0:
        return _as_output(np.zeros_like(arr), w)

    log_psi = (
        n * (math.log1p(kappa) - kappa)
        - kappa * arr
        + np.asarray(hyp0f1_scalar(n, n * kappa * (1.0 + kappa) * arr))
    )
    return _as_output(log_psi, w)


def psi_factor(w: ArrayLike, n: int, kappa: float) -> ArrayLike:
    """ψ(W, n); the κ = 0 limit short-circuits to exactly 1."""
    log_psi = np.asarray(log_psi_factor(w, n, kappa))
    if kappa == 0:
        return _as_output(np.ones_like(log_psi), w)
    return _as_output(np.exp(log_psi), w)
