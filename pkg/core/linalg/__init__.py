# -*- coding: utf-8 -*-
"""Dense complex linear algebra."""

from core.linalg.hermitian import (
    ComplexMatrix,
    HermitianMatrix,
    all_ones,
    batched_logdet_posdef,
    gram,
    hermitian_eigen,
    hermitian_sqrt,
    logdet_posdef,
)

__all__ = [
    "ComplexMatrix",
    "HermitianMatrix",
    "all_ones",
    "batched_logdet_posdef",
    "gram",
    "hermitian_eigen",
    "hermitian_sqrt",
    "logdet_posdef",
]
