"""Block flat-fading channel generation."""

from __future__ import annotations

import numpy as np

from ..value_objects.channel import ChannelMatrix, ChannelStatistics


def sample_channel(stats: ChannelStatistics, L: int, rng: np.random.Generator) -> ChannelMatrix:
    """Draw H with i.i.d. CN(0, g_k) entries in column k.

    Real and imaginary parts are independent N(0, g_k/2); no antenna correlation.
    """
    if L < 1:
        raise ValueError(f"Antenna count must be at least 1, got L={L}")
    scale = np.sqrt(stats.gains / 2.0)
    real = rng.standard_normal((L, stats.K))
    imag = rng.standard_normal((L, stats.K))
    return ChannelMatrix((real + 1j * imag) * scale[None, :])
