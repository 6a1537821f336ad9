"""SolutionVerifier domain service - independent feasibility check of a beamformer solution."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..value_objects.beamformer_solution import BeamformerSolution
from ..value_objects.channel import ChannelMatrix
from ..value_objects.service_groups import ServiceGroups
from ..value_objects.system_config import Scheme, SystemConfig
from .sinr import mmf_rate_terms, rs_rate_terms, sic_capacity_terms

DEFAULT_TOLERANCE = 1e-6


@dataclass(frozen=True, slots=True)
class Violation:
    """One constraint that the solution breaks."""

    constraint: str
    amount: float  # relative excess
    user: int | None = None
    streams: tuple[int, ...] = ()

    def __str__(self) -> str:
        where = f" user={self.user} streams={self.streams}" if self.user is not None else ""
        return f"{self.constraint}{where}: excess {self.amount:.3e}"


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """Outcome of recomputing every constraint from raw H and precoders."""

    max_violation: float
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations


def _relative_excess(lhs: float, rhs: float) -> float:
    return max(0.0, lhs - rhs) / max(1.0, abs(rhs))


class SolutionVerifier:
    """Recomputes the constraints of the relevant reformulation for a returned solution."""

    def __init__(self, tolerance: float = DEFAULT_TOLERANCE) -> None:
        self.tolerance = tolerance

    def verify(
        self,
        scheme: Scheme,
        groups: ServiceGroups,
        H: ChannelMatrix,
        solution: BeamformerSolution,
        config: SystemConfig,
    ) -> VerificationReport:
        """Check power, rate and service-time consistency.

        Args:
            scheme: Reformulation whose constraints apply
            groups: Served streams and users
            H: Channel realization used for the solve
            solution: Candidate solution
            config: Scenario (P, noise, F, B)

        Returns:
            Report with every constraint whose relative excess is above tolerance
        """
        noise = np.asarray(config.noise, dtype=float)
        checks: list[Violation] = []

        checks.append(Violation("power", max(0.0, solution.total_power - config.P) / config.P))

        if scheme is Scheme.MMF:
            checks.extend(self._mmf_checks(groups, H, solution, noise))
            expected_T = config.service_time_for_rate(solution.r_star)
        elif scheme is Scheme.MMF_SIC:
            checks.extend(self._sic_checks(groups, H, solution, noise))
            expected_T = config.service_time_for_rate(solution.r_star)
        else:
            checks.extend(self._rs_checks(groups, H, solution, noise, config))
            expected_T = math.inf if solution.r_star <= 0 else 1.0 / solution.r_star

        checks.append(Violation("service_time", self._time_mismatch(solution.T_star, expected_T)))

        max_violation = max(v.amount for v in checks)
        violations = tuple(v for v in checks if v.amount > self.tolerance)
        return VerificationReport(max_violation=max_violation, violations=violations)

    @staticmethod
    def _time_mismatch(actual: float, expected: float) -> float:
        if math.isinf(actual) and math.isinf(expected):
            return 0.0
        if math.isinf(actual) or math.isinf(expected):
            return math.inf
        return abs(actual - expected) / expected

    def _mmf_checks(
        self, groups: ServiceGroups, H: ChannelMatrix, solution: BeamformerSolution, noise
    ) -> list[Violation]:
        r = solution.r_star
        return [
            Violation(f"rate_{kind}", _relative_excess(len(streams) * r, capacity), user, streams)
            for kind, user, streams, capacity in mmf_rate_terms(groups, H, solution.w, noise)
        ]

    def _sic_checks(
        self, groups: ServiceGroups, H: ChannelMatrix, solution: BeamformerSolution, noise
    ) -> list[Violation]:
        checks = []
        rates = solution.stream_rates
        if rates is None or solution.beta is None:
            return [Violation("sic_fields_missing", math.inf)]
        for user, subset, capacity in sic_capacity_terms(groups, H, solution.w, noise):
            load = float(rates[list(subset)].sum())
            checks.append(Violation("rate_mac", _relative_excess(load, capacity), user, subset))
        checks.append(Violation("beta_sum", abs(float(np.sum(solution.beta)) - 1.0)))
        symmetric = float(np.sum(rates)) / groups.n_streams
        checks.append(Violation("symmetric_rate", _relative_excess(solution.r_star, symmetric)))
        if np.any(rates < -self.tolerance):
            checks.append(Violation("negative_rate", float(-rates.min())))
        return checks

    def _rs_checks(
        self,
        groups: ServiceGroups,
        H: ChannelMatrix,
        solution: BeamformerSolution,
        noise,
        config: SystemConfig,
    ) -> list[Violation]:
        if solution.alpha is None or solution.w_D is None:
            return [Violation("rs_fields_missing", math.inf)]
        alpha = solution.alpha
        rho = solution.r_star * config.file_service_scale
        checks = [
            Violation(f"rate_{kind}", _relative_excess(rho * load, capacity), user, streams)
            for kind, user, streams, load, capacity in rs_rate_terms(
                groups, H, solution.w, solution.w_D, alpha, noise
            )
        ]
        out_of_range = float(max(0.0, -alpha.min(), alpha.max() - 1.0))
        checks.append(Violation("alpha_range", out_of_range))
        return checks


def verify_solution(
    scheme: Scheme,
    groups: ServiceGroups,
    H: ChannelMatrix,
    solution: BeamformerSolution,
    config: SystemConfig,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    """Independent feasibility oracle; ok iff every constraint holds within ``tolerance``."""
    return SolutionVerifier(tolerance).verify(scheme, groups, H, solution, config)
