"""Content popularity and request-rate construction."""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from ..value_objects.rate_matrix import RateMatrix
from ..value_objects.system_config import SystemConfig


def zipf_popularity(N: int, gamma: float) -> NDArray[np.float64]:
    """Zipf law over a library of N files: p_n proportional to n^-gamma, n = 1..N.

    Raises:
        ValueError: If N < 1 or gamma < 0
    """
    if N < 1:
        raise ValueError(f"Library size must be at least 1, got N={N}")
    if gamma < 0:
        raise ValueError(f"Zipf exponent must be non-negative, got gamma={gamma}")

    weights = np.arange(1, N + 1, dtype=float) ** (-float(gamma))
    return weights / weights.sum()


def build_rate_matrix(config: SystemConfig) -> RateMatrix:
    """lambda_{nk} = lambda_total * p_n / K (uniform split across users)."""
    popularity = zipf_popularity(config.N, config.gamma)
    return RateMatrix.from_file_rates(config.lambda_total * popularity, config.K)
