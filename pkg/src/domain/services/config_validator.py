"""ConfigValidator domain service - checks SystemConfig invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..value_objects.system_config import QueueKind, SystemConfig


@dataclass(frozen=True, slots=True)
class ValidationIssue:
    """A single violated invariant."""

    severity: str  # "error", "warning"
    field: str
    message: str
    suggestion: str | None = None


class ConfigValidator:
    """Collects every violated SystemConfig invariant instead of stopping at the first."""

    def validate(self, config: SystemConfig) -> list[ValidationIssue]:
        """Validate a scenario configuration.

        Args:
            config: Configuration to check

        Returns:
            All issues found; empty when the configuration is valid
        """
        issues: list[ValidationIssue] = []
        issues.extend(self._check_counts(config))
        issues.extend(self._check_positive_reals(config))
        issues.extend(self._check_vectors(config))
        issues.extend(self._check_user_classes(config))
        issues.extend(self._check_queue_parameters(config))
        return issues

    def _check_counts(self, config: SystemConfig) -> list[ValidationIssue]:
        issues = []
        for name in ("L", "K", "N", "S"):
            value = getattr(config, name)
            if not isinstance(value, int) or value < 1:
                issues.append(ValidationIssue("error", name, f"{name} must be an integer >= 1"))
        if isinstance(config.S, int) and config.S > 4:
            issues.append(
                ValidationIssue(
                    "error",
                    "S",
                    "S must be <= 4 (common-user subset enumeration is exponential in S)",
                )
            )
        return issues

    def _check_positive_reals(self, config: SystemConfig) -> list[ValidationIssue]:
        issues = []
        for name in ("F", "B", "P", "r_eps"):
            value = getattr(config, name)
            if not (math.isfinite(value) and value > 0):
                issues.append(ValidationIssue("error", name, f"{name} must be > 0"))
        if not (math.isfinite(config.gamma) and config.gamma >= 0):
            issues.append(ValidationIssue("error", "gamma", "gamma must be >= 0"))
        if not (math.isfinite(config.lambda_total) and config.lambda_total >= 0):
            issues.append(
                ValidationIssue("error", "lambda_total", "lambda_total must be >= 0")
            )
        return issues

    def _check_vectors(self, config: SystemConfig) -> list[ValidationIssue]:
        issues = []
        for name in ("noise", "channel_gains"):
            values = getattr(config, name)
            if len(values) != config.K:
                issues.append(
                    ValidationIssue(
                        "error",
                        name,
                        f"{name} must have K={config.K} entries, got {len(values)}",
                        "per-user values follow a change of K only when all entries are equal",
                    )
                )
            bad = [k for k, v in enumerate(values) if not (math.isfinite(v) and v > 0)]
            if bad:
                issues.append(
                    ValidationIssue(
                        "error",
                        name,
                        f"{name} must be > 0 for every user (violated at users {bad})",
                    )
                )
        return issues

    def _check_user_classes(self, config: SystemConfig) -> list[ValidationIssue]:
        issues = []
        outside = sorted(k for k in config.good_user_set if not 0 <= k < config.K)
        if outside:
            issues.append(
                ValidationIssue(
                    "error",
                    "good_user_set",
                    f"good_user_set must be a subset of 0..K-1 (out of range: {outside})",
                )
            )

        if config.queue_kind.is_dual:
            proper = 0 < len(config.good_user_set) < config.K
            if not proper:
                issues.append(
                    ValidationIssue(
                        "error",
                        "good_user_set",
                        f"{config.queue_kind.value} needs a nonempty proper good_user_set",
                        suggestion="List the good-channel users, leaving at least one bad user",
                    )
                )
        elif config.good_user_set and config.queue_kind is QueueKind.SMQ:
            issues.append(
                ValidationIssue(
                    "warning",
                    "good_user_set",
                    "good_user_set only labels report classes for a single queue",
                )
            )
        return issues

    def _check_queue_parameters(self, config: SystemConfig) -> list[ValidationIssue]:
        issues = []
        if config.queue_kind is QueueKind.DSMQ and (not isinstance(config.C, int) or config.C < 2):
            issues.append(ValidationIssue("error", "C", "C must be ≥ 2"))
        if config.queue_kind is QueueKind.LOOPBACK and not (
            math.isfinite(config.r_thresh) and config.r_thresh > 0
        ):
            issues.append(ValidationIssue("error", "r_thresh", "r_thresh must be > 0"))
        return issues

    def format_issues_report(self, issues: list[ValidationIssue]) -> str:
        """Human-readable multi-line report."""
        if not issues:
            return "Configuration is valid"
        lines = []
        for issue in issues:
            line = f"[{issue.severity.upper()}] {issue.field}: {issue.message}"
            if issue.suggestion:
                line += f" ({issue.suggestion})"
            lines.append(line)
        return "\n".join(lines)


def validate(config: SystemConfig) -> list[ValidationIssue]:
    """Every violated invariant of ``config``; empty list means ok."""
    return ConfigValidator().validate(config)
