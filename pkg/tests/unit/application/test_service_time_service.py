"""Tests for the minimum-rate redraw rule."""

import math

import numpy as np
import pytest

from src.application.ports.i_beamformer import IBeamformer
from src.application.services.service_time_service import (
    RedrawServiceTimeSampler,
    service_with_redraw,
)
from src.domain.exceptions import RedrawLimitExceeded
from src.domain.value_objects.beamformer_solution import BeamformerSolution
from src.domain.value_objects.service_groups import ServiceGroups
from src.domain.value_objects.system_config import Scheme, SystemConfig
from tests.conftest import SequenceBeamformer

GROUPS = ServiceGroups.create([0], [[0, 1]])


def test_first_draw_above_threshold_is_served_directly(small_config, rng):
    outcome = RedrawServiceTimeSampler(SequenceBeamformer([0.5])).sample(
        GROUPS, small_config, rng
    )
    assert outcome.redraws == 0
    assert outcome.total_time == pytest.approx(0.5)


def test_each_redraw_idles_one_over_r_eps(small_config, rng):
    config = small_config.replace(r_eps=0.01)
    beamformer = SequenceBeamformer([math.inf, 200.0, 0.5])
    outcome = RedrawServiceTimeSampler(beamformer).sample(GROUPS, config, rng)
    # T = 200 s is a service rate of 0.005/s, still below r_eps
    assert outcome.redraws == 2
    assert outcome.total_time == pytest.approx(2 / 0.01 + 0.5)
    assert outcome.solution.T_star == pytest.approx(0.5)


def test_rate_exactly_at_threshold_is_accepted(small_config, rng):
    config = small_config.replace(r_eps=0.5)
    outcome = service_with_redraw(SequenceBeamformer([2.0]), GROUPS, config, rng)
    assert outcome.redraws == 0


def test_redraw_limit(small_config, rng):
    sampler = RedrawServiceTimeSampler(SequenceBeamformer([math.inf] * 4), max_redraws=2)
    with pytest.raises(RedrawLimitExceeded, match="r_eps"):
        sampler.sample(GROUPS, small_config, rng)


class ChannelGainBeamformer(IBeamformer):
    """Service rate equals the single user's channel gain |h|^2 (1/seconds)."""

    def solve_mmf(self, groups, H, config, rng=None):
        gain = float(np.abs(H.H[0, 0]) ** 2)
        return BeamformerSolution(
            scheme=Scheme.MMF,
            w=np.zeros((groups.n_streams, H.L), dtype=complex),
            r_star=config.F * gain / config.B,
            T_star=1.0 / gain,
        )

    solve_mmf_sic = solve_mmf
    solve_mmf_rs = solve_mmf


def test_redraw_count_is_geometric():
    # |h|^2 ~ Exp(1): a draw is rejected with p = 1 - exp(-r_eps)
    config = SystemConfig(L=1, K=1, N=1, P=10.0, r_eps=0.5)
    sampler = RedrawServiceTimeSampler(ChannelGainBeamformer())
    rng = np.random.default_rng(99)
    groups = ServiceGroups.create([0], [[0]])

    redraws = [sampler.sample(groups, config, rng).redraws for _ in range(6000)]

    assert np.mean(redraws) == pytest.approx(math.expm1(0.5), rel=0.08)
    assert np.mean(np.array(redraws) == 0) == pytest.approx(math.exp(-0.5), abs=0.02)
