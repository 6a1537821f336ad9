"""IServiceTimeSampler port - Interface for drawing one service of a group of streams."""

from __future__ import annotations

from abc import ABC, abstractmethod

import numpy as np

from src.application.dtos.service_outcome import ServiceOutcome
from src.domain.value_objects.service_groups import ServiceGroups
from src.domain.value_objects.system_config import SystemConfig


class IServiceTimeSampler(ABC):
    """Port interface for service-time samplers.

    Implementations might include:
    - RedrawServiceTimeSampler (fresh channel, beamforming solve, minimum-rate redraws)
    - Constant or scripted samplers (for testing)
    """

    @abstractmethod
    def sample(
        self, groups: ServiceGroups, config: SystemConfig, rng: np.random.Generator
    ) -> ServiceOutcome:
        """Draw the total time needed to deliver ``groups``.

        Args:
            groups: Head-of-line files and requesters
            config: Scenario
            rng: Random stream owned by the caller

        Returns:
            Outcome with the final solution, total time and redraw count

        Raises:
            RedrawLimitExceeded: If the minimum service rate is never reached
        """
