"""Numeric kernels for the summarizers."""

from .numerics import (
    ConvergenceStatus, RankResult, SvdResult,
    damped_score_iteration, svd_decompose, kl_divergence, normalize_counts,
)

__all__ = [
    'ConvergenceStatus', 'RankResult', 'SvdResult',
    'damped_score_iteration', 'svd_decompose', 'kl_divergence', 'normalize_counts',
]
