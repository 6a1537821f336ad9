"""Tests for small domain value objects."""

import heapq
import math

import numpy as np
import pytest

from src.domain.value_objects.beamformer_solution import BeamformerSolution
from src.domain.value_objects.channel import ChannelMatrix, ChannelStatistics
from src.domain.value_objects.delay_report import DelayReport, DelaySample
from src.domain.value_objects.event import Event, EventKind
from src.domain.value_objects.service_groups import ServiceGroups
from src.domain.value_objects.solver_settings import SolverSettings
from src.domain.value_objects.system_config import ALL, BAD, GOOD, Scheme
from src.domain.value_objects.theory import MomentEstimate


def test_completion_sorts_before_arrival_at_equal_time():
    events = []
    heapq.heappush(events, Event(1.0, EventKind.ARRIVAL, 0))
    heapq.heappush(events, Event(1.0, EventKind.SERVICE_COMPLETE, 1))
    heapq.heappush(events, Event(0.5, EventKind.ARRIVAL, 2))
    assert [heapq.heappop(events).seq for _ in range(3)] == [2, 1, 0]


def test_service_groups_enumerate_decoding_subsets():
    groups = ServiceGroups.create([4, 7, 9], [[0, 1], [1, 2], [1]])
    assert groups.users == (0, 1, 2)
    assert groups.streams_of(1) == (0, 1, 2)
    assert groups.decoding_subsets(0) == [(0,)]
    assert groups.decoding_subsets(2) == [(1,)]
    assert groups.decoding_subsets(1) == [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    assert groups.stream_subsets() == groups.decoding_subsets(1)


@pytest.mark.parametrize(
    "files,user_sets",
    [([], []), ([1, 2], [[0]]), ([1], [[]]), ([0, 1, 2, 3, 4], [[0]] * 5)],
)
def test_service_groups_reject_malformed_input(files, user_sets):
    with pytest.raises(ValueError):
        ServiceGroups.create(files, user_sets)


def test_channel_statistics_from_db():
    stats = ChannelStatistics.from_db([0.0, -15.0])
    assert stats.gains == pytest.approx([1.0, 10 ** -1.5])
    with pytest.raises(ValueError):
        ChannelStatistics(np.array([1.0, 0.0]))


def test_channel_matrix_is_read_only():
    H = ChannelMatrix(np.ones((2, 3)))
    assert (H.L, H.K) == (2, 3)
    with pytest.raises(ValueError):
        H.H[0, 0] = 2.0


def test_beamformer_solution_power_and_rate():
    solution = BeamformerSolution(
        scheme=Scheme.MMF_RS,
        w=np.ones((1, 2), dtype=complex),
        r_star=2.0,
        T_star=0.5,
        w_D=np.ones(2, dtype=complex),
        alpha=np.array([0.3]),
    )
    assert solution.total_power == pytest.approx(4.0)
    assert solution.service_rate == pytest.approx(2.0)
    with pytest.raises(ValueError):
        BeamformerSolution(scheme=Scheme.MMF, w=np.zeros((1, 1)), r_star=-1.0, T_star=1.0)


def test_delay_report_class_means():
    samples = (
        DelaySample(0, 0, 1, GOOD, 1.0),
        DelaySample(0, 2, 1, BAD, 3.0),
        DelaySample(1, 0, 2, GOOD, 2.0),
    )
    report = DelayReport(samples, service_times=(0.5, 1.5), classes=(ALL, GOOD, BAD))
    assert report.mean_sojourn == pytest.approx(2.0)
    assert report.class_means == pytest.approx({ALL: 2.0, GOOD: 1.5, BAD: 3.0})
    assert report.mean_service_time == pytest.approx(1.0)
    assert math.isnan(DelayReport(()).mean_sojourn)
    with pytest.raises(ValueError):
        DelayReport((DelaySample(0, 0, 0, ALL, 0.0),))


def test_moment_estimate():
    estimate = MomentEstimate.from_samples(np.array([1.0, 3.0]))
    assert (estimate.ET, estimate.ET2, estimate.samples) == (2.0, 5.0, 2)


def test_solver_settings_reject_unknown_keys():
    assert SolverSettings.from_mapping({"n_starts": 3}).n_starts == 3
    with pytest.raises(ValueError):
        SolverSettings.from_mapping({"starts": 3})
    with pytest.raises(ValueError):
        SolverSettings(n_starts=0)
