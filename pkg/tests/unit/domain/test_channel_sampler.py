"""Tests for flat-fading channel draws."""

import numpy as np
import pytest

from src.domain.services.channel_sampler import sample_channel
from src.domain.value_objects.channel import ChannelStatistics


def test_shape_is_antennas_by_users():
    H = sample_channel(ChannelStatistics(np.ones(3)), 4, np.random.default_rng(0))
    assert H.H.shape == (4, 3)
    assert H.L == 4 and H.K == 3


def test_column_power_follows_mean_fading():
    stats = ChannelStatistics.from_db([0.0, -10.0])
    H = sample_channel(stats, 4000, np.random.default_rng(7))
    power = np.mean(np.abs(H.H) ** 2, axis=0)
    assert power == pytest.approx([1.0, 0.1], rel=0.1)


def test_real_and_imaginary_parts_share_the_power():
    H = sample_channel(ChannelStatistics(np.ones(1)), 4000, np.random.default_rng(3))
    column = H.column(0)
    assert np.mean(column.real**2) == pytest.approx(0.5, rel=0.1)
    assert np.mean(column.imag**2) == pytest.approx(0.5, rel=0.1)


def test_same_seed_same_channel():
    stats = ChannelStatistics(np.array([1.0, 2.0]))
    a = sample_channel(stats, 3, np.random.default_rng(11))
    b = sample_channel(stats, 3, np.random.default_rng(11))
    np.testing.assert_array_equal(a.H, b.H)


def test_rejects_zero_antennas():
    with pytest.raises(ValueError, match="L=0"):
        sample_channel(ChannelStatistics(np.ones(2)), 0, np.random.default_rng(0))
