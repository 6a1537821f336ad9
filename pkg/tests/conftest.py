"""Shared fixtures and test doubles."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np
import pytest

from src.application.dtos.service_outcome import ServiceOutcome
from src.application.ports.i_beamformer import IBeamformer
from src.application.ports.i_service_time_sampler import IServiceTimeSampler
from src.domain.value_objects.beamformer_solution import BeamformerSolution
from src.domain.value_objects.channel import ChannelMatrix
from src.domain.value_objects.request import Request
from src.domain.value_objects.service_groups import ServiceGroups
from src.domain.value_objects.system_config import Scheme, SystemConfig


class ConstantServiceSampler(IServiceTimeSampler):
    """Every service takes ``service_time`` seconds, whatever is transmitted."""

    def __init__(self, service_time: float = 0.05) -> None:
        self.service_time = service_time
        self.groups_seen: list[ServiceGroups] = []

    def sample(self, groups, config, rng) -> ServiceOutcome:
        self.groups_seen.append(groups)
        return ServiceOutcome(solution=None, total_time=self.service_time)


class FixedRateBeamformer(IBeamformer):
    """Returns precomputed rates: ``rate_of(user)`` per user, the minimum as symmetric rate."""

    def __init__(self, rate_of: Callable[[int], float] = lambda user: 1.0) -> None:
        self.rate_of = rate_of
        self.calls = 0

    def _solution(self, scheme, groups: ServiceGroups, H: ChannelMatrix, config: SystemConfig):
        self.calls += 1
        rates = {u: self.rate_of(u) for u in groups.users}
        r = min(rates.values())
        return BeamformerSolution(
            scheme=scheme,
            w=np.zeros((groups.n_streams, H.L), dtype=complex),
            r_star=r,
            T_star=config.service_time_for_rate(r),
            per_user_rates=rates,
        )

    def solve_mmf(self, groups, H, config, rng=None):
        return self._solution(Scheme.MMF, groups, H, config)

    def solve_mmf_sic(self, groups, H, config, rng=None):
        return self._solution(Scheme.MMF_SIC, groups, H, config)

    def solve_mmf_rs(self, groups, H, config, rng=None):
        return self._solution(Scheme.MMF_RS, groups, H, config)


class SequenceBeamformer(IBeamformer):
    """Returns solutions with the given service times in order (inf = zero rate)."""

    def __init__(self, service_times: list[float]) -> None:
        self.service_times = list(service_times)

    def solve_mmf(self, groups, H, config, rng=None):
        T = self.service_times.pop(0)
        r = 0.0 if math.isinf(T) else config.F / (config.B * T)
        return BeamformerSolution(
            scheme=Scheme.MMF,
            w=np.zeros((groups.n_streams, H.L), dtype=complex),
            r_star=r,
            T_star=T,
        )

    solve_mmf_sic = solve_mmf
    solve_mmf_rs = solve_mmf


@pytest.fixture
def small_config() -> SystemConfig:
    """Two antennas, four users, five files, light load."""
    return SystemConfig(L=2, K=4, N=5, P=10.0, lambda_total=4.0, F=1e6, B=1e6)


@pytest.fixture
def dual_config(small_config) -> SystemConfig:
    return small_config.replace(queue_kind="DSMQ", good_user_set=frozenset({0, 1}), C=3)


@pytest.fixture
def constant_sampler() -> ConstantServiceSampler:
    return ConstantServiceSampler(0.05)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


def make_request(file: int, user: int, t: float, request_id: int = 0) -> Request:
    return Request(file=file, user=user, t_arrival=t, request_id=request_id)
