"""RedrawServiceTimeSampler - channel draw, beamforming solve and the minimum-rate redraw rule."""

from __future__ import annotations

import logging

import numpy as np

from src.application.dtos.service_outcome import ServiceOutcome
from src.application.ports.i_beamformer import IBeamformer
from src.application.ports.i_service_time_sampler import IServiceTimeSampler
from src.domain.exceptions import RedrawLimitExceeded
from src.domain.services.channel_sampler import sample_channel
from src.domain.value_objects.channel import ChannelStatistics
from src.domain.value_objects.service_groups import ServiceGroups
from src.domain.value_objects.system_config import SystemConfig

logger = logging.getLogger(__name__)


class RedrawServiceTimeSampler(IServiceTimeSampler):
    """Serve a group on a fresh channel, idling 1/r_eps and redrawing while 1/T* < r_eps.

    The comparison is made on the service rate 1/T* (1/seconds) for every
    scheme, so r_eps has the same meaning for MMF, MMF-SIC and MMF-RS.
    """

    def __init__(self, beamformer: IBeamformer, max_redraws: int = 1000) -> None:
        """Initialize sampler.

        Args:
            beamformer: Solver used for every channel draw
            max_redraws: Redraws allowed before RedrawLimitExceeded
        """
        self.beamformer = beamformer
        self.max_redraws = max_redraws

    def sample(
        self, groups: ServiceGroups, config: SystemConfig, rng: np.random.Generator
    ) -> ServiceOutcome:
        stats = ChannelStatistics(np.asarray(config.channel_gains))
        redraws = 0
        while True:
            H = sample_channel(stats, config.L, rng)
            solution = self.beamformer.solve(config.scheme, groups, H, config, rng)
            if solution.service_rate >= config.r_eps:
                break
            redraws += 1
            if redraws > self.max_redraws:
                raise RedrawLimitExceeded(
                    f"{redraws - 1} consecutive channel draws below r_eps={config.r_eps}/s "
                    f"for {groups.n_streams} stream(s); r_eps is likely mis-scaled"
                )
            logger.debug(
                f"Service rate {solution.service_rate:.4g}/s below r_eps, redraw #{redraws}"
            )

        total_time = redraws / config.r_eps + solution.T_star
        return ServiceOutcome(solution=solution, total_time=total_time, redraws=redraws)


def service_with_redraw(
    beamformer: IBeamformer,
    groups: ServiceGroups,
    config: SystemConfig,
    rng: np.random.Generator,
    max_redraws: int = 1000,
) -> ServiceOutcome:
    """Functional form of RedrawServiceTimeSampler.sample."""
    return RedrawServiceTimeSampler(beamformer, max_redraws).sample(groups, config, rng)
