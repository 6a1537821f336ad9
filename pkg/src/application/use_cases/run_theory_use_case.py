"""RunTheoryUseCase - validated theoretical mean sojourn times."""

from __future__ import annotations

import logging

from src.application.dtos.theory_settings import TheorySettings
from src.application.ports.i_service_time_sampler import IServiceTimeSampler
from src.application.services.theory_service import TheoryAnalyzer
from src.domain.exceptions import ConfigValidationError
from src.domain.services.config_validator import ConfigValidator
from src.domain.value_objects.system_config import SystemConfig
from src.domain.value_objects.theory import TheoryResult

logger = logging.getLogger(__name__)


class RunTheoryUseCase:
    """Validate the scenario and run the SMQ or DSMQ theory loop."""

    def __init__(self, sampler: IServiceTimeSampler, validator: ConfigValidator | None = None):
        self.sampler = sampler
        self.validator = validator or ConfigValidator()

    def execute(self, config: SystemConfig, settings: TheorySettings | None = None) -> TheoryResult:
        """Run the theory for ``config``.

        Raises:
            ConfigValidationError: If the configuration violates an invariant
            ValueError: If the queue discipline has no theory (Loopback, 2Q-Simultaneous)
        """
        errors = [i for i in self.validator.validate(config) if i.severity == "error"]
        if errors:
            raise ConfigValidationError(errors)
        analyzer = TheoryAnalyzer(self.sampler, settings)
        result = analyzer.analyze(config)
        logger.info(
            f"Theory {config.queue_kind.value}/{config.scheme.value} lambda={config.lambda_total}: "
            + ", ".join(f"{c.user_class}={c.mean_sojourn:.4g}s" for c in result.classes)
            + f" after {result.iterations} pass(es)"
        )
        return result
