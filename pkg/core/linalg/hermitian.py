# -*- coding: utf-8 -*-
"""Dense complex linear algebra for capacity computations.

Only what the capacity code needs: Gram products, a cyclic Jacobi eigensolver
for Hermitian matrices, PSD square roots, and Cholesky log-determinants
(single matrix and stacked, the latter being the Monte Carlo hot path).

All matrices are small and dense; values are immutable after construction.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from core.errors import DomainError, EigenConvergenceError

logger = logging.getLogger(__name__)

HERMITIAN_RTOL = 1e-12
PIVOT_RTOL = 1e-12
JACOBI_MAX_SWEEPS = 60


def _frozen(values: np.ndarray) -> np.ndarray:
    arr = np.array(values, dtype=np.complex128, copy=True, order="C")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ComplexMatrix:
    """Dense row-major complex matrix (H, M, Ψ, U)."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.entries)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DomainError(f"ComplexMatrix needs a non-empty 2-D array, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise DomainError("ComplexMatrix entries must be finite")
        object.__setattr__(self, "entries", _frozen(arr))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    def conj_t(self) -> "ComplexMatrix":
        return ComplexMatrix(self.entries.conj().T)


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Square conjugate-symmetric matrix, stored exactly symmetrized (W, Q, Υ, Σ, D)."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.entries, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise DomainError(f"HermitianMatrix needs a non-empty square array, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise DomainError("HermitianMatrix entries must be finite")
        scale = max(1.0, float(np.max(np.abs(arr))))
        skew = float(np.max(np.abs(arr - arr.conj().T)))
        if skew > HERMITIAN_RTOL * scale:
            raise DomainError(f"matrix is not Hermitian (max |A - A^H| = {skew:.3e})")
        sym = 0.5 * (arr + arr.conj().T)
        object.__setattr__(self, "entries", _frozen(sym))

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def trace(self) -> float:
        return float(np.real(np.trace(self.entries)))

    @classmethod
    def identity(cls, dim: int) -> "HermitianMatrix":
        return cls(np.eye(dim, dtype=np.complex128))

    @classmethod
    def diagonal(cls, values) -> "HermitianMatrix":
        return cls(np.diag(np.asarray(values, dtype=np.float64)).astype(np.complex128))


def all_ones(rows: int, cols: int) -> ComplexMatrix:
    """The Ψ matrix of all ones."""
    return ComplexMatrix(np.ones((int(rows), int(cols)), dtype=np.complex128))


def gram(h: ComplexMatrix, side: str = "left") -> HermitianMatrix:
    """H·Hᴴ (``left``) or Hᴴ·H (``right``)."""
    arr = h.entries
    if side == "left":
        return HermitianMatrix(arr @ arr.conj().T)
    if side == "right":
        return HermitianMatrix(arr.conj().T @ arr)
    raise DomainError(f"side must be 'left' or 'right', got {side!r}")


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    b = a[p, q]
    mag = abs(b)
    app = a[p, p].real
    aqq = a[q, q].real
    theta = (aqq - app) / (2.0 * mag)
    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    e = np.conj(b) / mag

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * e * col_q
    a[:, q] = s * col_p + c * e * col_q

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * np.conj(e) * row_q
    a[q, :] = s * row_p + c * np.conj(e) * row_q

    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = c * vec_p - s * e * vec_q
    v[:, q] = s * vec_p + c * e * vec_q


def hermitian_eigen(a: HermitianMatrix, *, max_sweeps: int = JACOBI_MAX_SWEEPS) -> Tuple[np.ndarray, ComplexMatrix]:
    """Cyclic Jacobi eigendecomposition ``a = U diag(λ) Uᴴ``.

    Returns eigenvalues in descending order and the unitary U whose columns
    are the matching eigenvectors. An off-diagonal entry is treated as zero
    once it is negligible against both its diagonal partners and the matrix
    norm; a sweep with no rotation ends the iteration.
    """
    work = np.array(a.entries, dtype=np.complex128, copy=True)
    n = work.shape[0]
    vecs = np.eye(n, dtype=np.complex128)
    norm = float(np.linalg.norm(work))
    floor = 1e-15 * norm

    sweeps = 0
    while True:
        rotated = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                mag = abs(work[p, q])
                if mag <= floor:
                    continue
                if mag <= 1e-16 * np.sqrt(abs(work[p, p].real * work[q, q].real)):
                    continue
                _rotate(work, vecs, p, q)
                rotated += 1
        sweeps += 1
        if rotated == 0:
            break
        if sweeps >= max_sweeps:
            off = float(np.linalg.norm(work - np.diag(np.diag(work))))
            raise EigenConvergenceError(
                f"Jacobi did not converge after {sweeps} sweeps (off-diagonal norm {off:.3e})",
                sweeps=sweeps,
                off_norm=off,
            )

    logger.debug("jacobi: dim=%d sweeps=%d", n, sweeps)
    values = np.real(np.diag(work)).copy()
    order = np.argsort(values, kind="stable")[::-1]
    return values[order], ComplexMatrix(vecs[:, order])


def hermitian_sqrt(a: HermitianMatrix) -> HermitianMatrix:
    """PSD square root; tiny negative eigenvalues are clipped to zero."""
    values, vecs = hermitian_eigen(a)
    u = vecs.entries
    root = np.sqrt(np.clip(values, 0.0, None))
    return HermitianMatrix((u * root) @ u.conj().T)


def _check_pivots(factor: np.ndarray, source: np.ndarray) -> None:
    pivots = np.real(np.diagonal(factor, axis1=-2, axis2=-1)) ** 2
    scale = np.max(np.real(np.diagonal(source, axis1=-2, axis2=-1)), axis=-1, keepdims=True)
    if np.any(pivots < PIVOT_RTOL * scale):
        raise DomainError("matrix is not positive definite (Cholesky pivot below threshold)")


def logdet_posdef(a: HermitianMatrix) -> float:
    """Natural log-determinant of a positive definite matrix via Cholesky."""
    try:
        factor = np.linalg.cholesky(a.entries)
    except np.linalg.LinAlgError as exc:
        raise DomainError(f"matrix is not positive definite: {exc}") from exc
    _check_pivots(factor, a.entries)
    return float(2.0 * np.sum(np.log(np.real(np.diagonal(factor)))))


def batched_logdet_posdef(stack: np.ndarray) -> np.ndarray:
    """Log-determinants of a (k, d, d) stack of Hermitian PD matrices."""
    arr = np.asarray(stack, dtype=np.complex128)
    if arr.ndim != 3 or arr.shape[-1] != arr.shape[-2]:
        raise DomainError(f"expected a (k, d, d) stack, got shape {arr.shape}")
    try:
        factor = np.linalg.cholesky(arr)
    except np.linalg.LinAlgError as exc:
        raise DomainError(f"stack holds a non positive definite matrix: {exc}") from exc
    _check_pivots(factor, arr)
    return 2.0 * np.sum(np.log(np.real(np.diagonal(factor, axis1=-2, axis2=-1))), axis=-1)
