# -*- coding: utf-8 -*-
"""Rician MIMO channel model."""

from core.channel.model import (
    COVARIANCE_TAGS,
    EXPLICIT,
    RICIAN_WEIGHTED,
    SCALED_IDENTITY,
    ChannelConfig,
    CovarianceScheme,
    RngStream,
    awgn_covariance,
    covariance,
    db_to_linear,
    derive_seed,
    explicit_covariance,
    linear_to_db,
    mean_matrix,
    rician_envelope_cdf,
    rician_envelope_pdf,
    rician_weighted,
    sample_h,
    sample_h_batch,
    scaled_identity,
    upsilon,
)

__all__ = [
    "COVARIANCE_TAGS",
    "EXPLICIT",
    "RICIAN_WEIGHTED",
    "SCALED_IDENTITY",
    "ChannelConfig",
    "CovarianceScheme",
    "RngStream",
    "awgn_covariance",
    "covariance",
    "db_to_linear",
    "derive_seed",
    "explicit_covariance",
    "linear_to_db",
    "mean_matrix",
    "rician_envelope_cdf",
    "rician_envelope_pdf",
    "rician_weighted",
    "sample_h",
    "sample_h_batch",
    "scaled_identity",
    "upsilon",
]
