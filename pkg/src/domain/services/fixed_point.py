"""Type-1 delay fixed point and the M/G/1-style mean sojourn approximation.

Type-1 (T1) requests open a new queue entry; Type-2 requests merge into a
waiting one. T1 traffic is treated as an M/G/1 queue with S servers' worth
of utilization, which gives the map

    f(d) = rho_d / (S - rho_d) * ET2 / (2 ET),   rho_d = ET * sum_i lambda_i / (1 + lambda_i d)

whose unique fixed point d* is the mean T1 delay.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.optimize import brentq

from ..exceptions import FixedPointDivergence
from ..value_objects.theory import FixedPointInput

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9
MAX_PLAIN_ITERATIONS = 500
DIVERGENCE_FACTOR = 10.0


def effective_rate(lambda_i: ArrayLike, d: float) -> NDArray[np.float64] | float:
    """Type-1 arrival rate lambda_i / (1 + lambda_i d); scalar in, scalar out."""
    if d < 0:
        raise ValueError(f"Type-1 delay must be non-negative, got {d}")
    lam = np.asarray(lambda_i, dtype=float)
    if np.any(lam < 0):
        raise ValueError("Request rates must be non-negative")
    result = lam / (1.0 + lam * d)
    return float(result) if result.ndim == 0 else result


def _utilization(d: float, data: FixedPointInput) -> float:
    return data.ET * float(np.sum(effective_rate(data.lambda_i, d)))


def fixed_point_map(d: float, data: FixedPointInput) -> float:
    """f(d); infinite when the T1 utilization reaches S."""
    rho = _utilization(d, data)
    if rho >= data.S:
        return math.inf
    return rho / (data.S - rho) * data.ET2 / (2.0 * data.ET)


def divergence_limit(data: FixedPointInput) -> float:
    """Largest admissible T1 delay, a multiple of the ET*N/S asymptote."""
    return DIVERGENCE_FACTOR * data.ET * data.N / data.S


def _stability_edge(data: FixedPointInput) -> float:
    """Smallest d with rho_d <= S (0 when already stable at d = 0)."""
    if _utilization(0.0, data) < data.S:
        return 0.0
    positive = int(np.count_nonzero(data.lambda_i > 0))
    upper = data.ET * positive / data.S
    return brentq(lambda d: _utilization(d, data) - data.S, 0.0, upper, xtol=1e-14)


def fixed_point_t1(
    data: FixedPointInput, tol: float = DEFAULT_TOLERANCE, d0: float = 0.0
) -> float:
    """Solve d = f(d) for the mean Type-1 delay.

    Plain iteration from ``d0`` is tried first. When it leaves the stable
    region or does not settle, the root of g(d) = d - f(d) is bracketed
    instead; f is decreasing in d so the root is unique.

    Args:
        data: Streams, per-file rates and service moments
        tol: Stopping tolerance on |d_{n+1} - d_n|
        d0: Starting delay

    Returns:
        d* >= 0

    Raises:
        FixedPointDivergence: If d* would exceed 10 * ET * N / S
    """
    if data.lambda_total == 0.0 or data.ET2 == 0.0:
        return 0.0

    limit = divergence_limit(data)
    d = max(float(d0), 0.0)
    for iteration in range(MAX_PLAIN_ITERATIONS):
        d_next = fixed_point_map(d, data)
        if not math.isfinite(d_next) or d_next > limit:
            break
        if abs(d_next - d) < tol:
            logger.debug(f"T1 fixed point after {iteration + 1} iterations: d*={d_next:.6g}")
            return d_next
        d = d_next

    def residual(x: float) -> float:
        return x - fixed_point_map(x, data)

    lower = _stability_edge(data)
    if residual(limit) <= 0.0:
        raise FixedPointDivergence(
            f"T1 delay exceeds divergence limit {limit:.4g} s (ET={data.ET:.4g}, S={data.S})"
        )
    # f is infinite at the stability edge; step inside until it is finite
    a, step = lower, max(lower * 1e-12, 1e-15)
    while not math.isfinite(fixed_point_map(a, data)):
        a, step = a + step, step * 2.0
    if residual(a) >= 0.0:
        return a
    d_star = brentq(residual, a, limit, xtol=tol, rtol=4 * np.finfo(float).eps)
    logger.debug(f"T1 fixed point bracketed in [{lower:.4g}, {limit:.4g}]: d*={d_star:.6g}")
    return d_star


def mean_sojourn(d_star: float, lambda_prime: float, lambda_total: float, ET: float) -> float:
    """T1 requests wait d*, merged requests wait d*/2 on average, everyone is then served.

    Returns NaN when the class carries no traffic.
    """
    if lambda_total <= 0:
        return math.nan
    if lambda_prime > lambda_total * (1.0 + 1e-12):
        raise ValueError("Type-1 rate cannot exceed the total rate")
    share = lambda_prime / lambda_total
    return share * d_star + (1.0 - share) * d_star / 2.0 + ET


def dsmq_mixed_moments(
    T1: float, T1sq: float, T2: float, T2sq: float, C: int
) -> tuple[float, float, float, float]:
    """Effective service moments seen by SMQ-G and SMQ-B under E-limited polling.

    Returns:
        (T_G, T2_G, T_B, T2_B)
    """
    if C < 2:
        raise ValueError(f"C must be >= 2, got {C}")
    T_G = T1 + T2 / (C - 1)
    T2_G = T1sq + T2sq / (C - 1)
    T_B = T1 * (C - 1) + T2
    T2_B = T1sq * (C - 1) + T2sq
    return T_G, T2_G, T_B, T2_B


def stability_bound(ET: float, ET2: float, N: int, S: int) -> float:
    """Large-load limit of d*, where every file is requested and rho_d ~ ET * N / d.

    Positive root of 2 S d^2 - 2 ET N d - N ET2 = 0; tends to ET * N / S for large N.
    """
    a = ET * N
    return (2.0 * a + math.sqrt(4.0 * a * a + 8.0 * ET2 * N * S)) / (4.0 * S)
