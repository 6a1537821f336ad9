"""IBeamformer port - Interface for max-min-fair precoder solvers."""

from __future__ import annotations

from abc import ABC, abstractmethod

import numpy as np

from src.domain.value_objects.beamformer_solution import BeamformerSolution
from src.domain.value_objects.channel import ChannelMatrix
from src.domain.value_objects.service_groups import ServiceGroups
from src.domain.value_objects.system_config import Scheme, SystemConfig


class IBeamformer(ABC):
    """Port interface for beamforming solvers.

    Implementations might include:
    - SlsqpBeamformer (multi-start SciPy SLSQP)
    - Stub solvers returning fixed service times (for testing)
    """

    @abstractmethod
    def solve_mmf(
        self,
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
        rng: np.random.Generator | None = None,
    ) -> BeamformerSolution:
        """Maximize the symmetric rate with interference treated as noise.

        Args:
            groups: Streams and their requesting users
            H: Channel realization
            config: Scenario (P, noise, F, B)
            rng: Random stream for random starting points

        Returns:
            Verified-feasible solution, or the degenerate w = 0 solution
        """

    @abstractmethod
    def solve_mmf_sic(
        self,
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
        rng: np.random.Generator | None = None,
    ) -> BeamformerSolution:
        """Maximize the sum of stream rates when every served user decodes all streams."""

    @abstractmethod
    def solve_mmf_rs(
        self,
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
        rng: np.random.Generator | None = None,
    ) -> BeamformerSolution:
        """Maximize the file rate with part of every file on a shared degraded stream."""

    def solve(
        self,
        scheme: Scheme,
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
        rng: np.random.Generator | None = None,
    ) -> BeamformerSolution:
        """Dispatch to the solver of ``scheme``."""
        if scheme is Scheme.MMF:
            return self.solve_mmf(groups, H, config, rng)
        if scheme is Scheme.MMF_SIC:
            return self.solve_mmf_sic(groups, H, config, rng)
        return self.solve_mmf_rs(groups, H, config, rng)
