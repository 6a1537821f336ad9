"""Tests for head-of-line user-set sampling."""

import numpy as np
import pytest
from scipy import stats

from src.domain.services.user_distribution import sample_head_users
from src.domain.value_objects.rate_matrix import RateMatrix
from src.domain.value_objects.theory import UserDistributionSpec


def test_zero_delay_yields_single_requesters():
    rates = RateMatrix.from_file_rates(np.array([3.0, 1.0, 0.5]), K=4)
    spec = UserDistributionSpec.create(0.0, rates, S=2)
    sample = sample_head_users(spec, np.random.default_rng(0))
    assert len(sample.files) == 2
    assert len(set(sample.files)) == 2
    assert all(len(users) == 1 for users in sample.user_sets)


def test_streams_limited_by_files_with_traffic():
    rates = RateMatrix.from_file_rates(np.array([2.0, 0.0, 0.0]), K=3)
    spec = UserDistributionSpec.create(1.0, rates, S=3)
    sample = sample_head_users(spec, np.random.default_rng(1))
    assert sample.files == (0,)


def test_no_traffic_cannot_be_sampled():
    rates = RateMatrix(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        sample_head_users(UserDistributionSpec.create(0.0, rates, 1), np.random.default_rng(0))


def test_long_delay_gathers_most_users():
    rates = RateMatrix.from_file_rates(np.array([40.0]), K=4)
    spec = UserDistributionSpec.create(5.0, rates, S=1)
    sizes = [len(sample_head_users(spec, np.random.default_rng(s)).user_sets[0]) for s in range(50)]
    assert np.mean(sizes) > 3.9


def test_sampling_is_reproducible():
    rates = RateMatrix.from_file_rates(np.linspace(1.0, 0.1, 10), K=6)
    spec = UserDistributionSpec.create(0.8, rates, S=3)
    a = sample_head_users(spec, np.random.default_rng(42))
    b = sample_head_users(spec, np.random.default_rng(42))
    assert a == b


def test_requesters_only_come_from_users_with_rate():
    rates = RateMatrix(np.array([[1.0, 0.0], [0.0, 0.0], [2.0, 1.0]]))
    spec = UserDistributionSpec.create(0.3, rates, S=2)
    for seed in range(20):
        sample = sample_head_users(spec, np.random.default_rng(seed))
        assert all(1 not in users for users in sample.user_sets)


def test_head_file_follows_type_one_rates():
    rates = RateMatrix.from_file_rates(np.array([4.0, 2.0, 1.0, 0.5, 0.5]), K=3)
    spec = UserDistributionSpec.create(0.6, rates, S=1)
    rng = np.random.default_rng(2)
    n = 5000
    files = [sample_head_users(spec, rng).files[0] for _ in range(n)]

    counts = np.bincount(files, minlength=rates.N)
    expected = n * spec.lambda_prime / spec.lambda_prime.sum()
    assert stats.chisquare(counts, expected).pvalue > 1e-3


def test_other_users_join_with_inclusion_probability():
    rates = RateMatrix.from_file_rates(np.array([6.0]), K=3)
    spec = UserDistributionSpec.create(0.3, rates, S=1)
    rng = np.random.default_rng(4)
    sets = [sample_head_users(spec, rng).user_sets[0] for _ in range(10_000)]

    q = 1.0 - np.exp(-2.0 * 0.3)
    # each user is the first requester a third of the time and joins otherwise
    for user in range(3):
        frequency = np.mean([user in users for users in sets])
        assert frequency == pytest.approx(1 / 3 + 2 / 3 * q, abs=0.02)
