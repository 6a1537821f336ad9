"""Domain services - Stateless model logic shared by the simulator and the theory."""

from .channel_sampler import sample_channel
from .config_validator import ConfigValidator, ValidationIssue, validate
from .fixed_point import (
    dsmq_mixed_moments,
    effective_rate,
    fixed_point_map,
    fixed_point_t1,
    mean_sojourn,
    stability_bound,
)
from .popularity import build_rate_matrix, zipf_popularity
from .scheduling import LoopbackDecision, QueueChoice, dsmq_pick, loopback_filter, two_q_pick
from .sinr import (
    mmf_symmetric_rate,
    per_user_rates,
    rs_symmetric_rate,
    sinr_degraded,
    sinr_mmf,
    sinr_sic,
)
from .solution_verifier import SolutionVerifier, VerificationReport, Violation, verify_solution
from .user_distribution import sample_head_users

__all__ = [
    "ConfigValidator",
    "LoopbackDecision",
    "QueueChoice",
    "SolutionVerifier",
    "ValidationIssue",
    "VerificationReport",
    "Violation",
    "build_rate_matrix",
    "dsmq_mixed_moments",
    "dsmq_pick",
    "effective_rate",
    "fixed_point_map",
    "fixed_point_t1",
    "loopback_filter",
    "mean_sojourn",
    "mmf_symmetric_rate",
    "per_user_rates",
    "rs_symmetric_rate",
    "sample_channel",
    "sample_head_users",
    "sinr_degraded",
    "sinr_mmf",
    "sinr_sic",
    "stability_bound",
    "two_q_pick",
    "validate",
    "verify_solution",
    "zipf_popularity",
]
