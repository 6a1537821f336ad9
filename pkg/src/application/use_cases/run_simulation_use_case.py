"""RunSimulationUseCase - validated single simulation run."""

from __future__ import annotations

import logging

from src.application.dtos.simulation_request import SimulationRequest
from src.application.services.simulation_engine import EventObserver, SimulationEngine
from src.domain.exceptions import ConfigValidationError
from src.domain.services.config_validator import ConfigValidator
from src.domain.value_objects.delay_report import DelayReport

logger = logging.getLogger(__name__)


class RunSimulationUseCase:
    """Validate the scenario, then run one replication of the event loop."""

    def __init__(self, engine: SimulationEngine, validator: ConfigValidator | None = None) -> None:
        self.engine = engine
        self.validator = validator or ConfigValidator()

    def execute(
        self, request: SimulationRequest, on_event: EventObserver | None = None
    ) -> DelayReport:
        """Run the simulation.

        Raises:
            ConfigValidationError: If the configuration violates an invariant
        """
        issues = self.validator.validate(request.config)
        errors = [i for i in issues if i.severity == "error"]
        if errors:
            raise ConfigValidationError(errors)
        for warning in (i for i in issues if i.severity == "warning"):
            logger.warning(f"{warning.field}: {warning.message}")

        report = self.engine.run(request, on_event=on_event)
        logger.debug(
            f"Seed {request.seed}: {report.n_services} services, {len(report.samples)} samples, "
            f"mean sojourn {report.mean_sojourn:.4g}s"
        )
        return report
