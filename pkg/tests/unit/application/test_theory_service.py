"""Tests for the iterative SMQ and DSMQ theory."""

import math

import pytest

from src.application.dtos.service_outcome import ServiceOutcome
from src.application.dtos.theory_settings import TheorySettings
from src.application.services.theory_service import TheoryAnalyzer
from src.domain.exceptions import NonConvergenceError
from src.domain.services.fixed_point import fixed_point_t1, mean_sojourn
from src.domain.services.popularity import build_rate_matrix
from src.domain.value_objects.system_config import BAD, GOOD
from src.domain.value_objects.theory import FixedPointInput
from tests.conftest import ConstantServiceSampler

SETTINGS = TheorySettings(eps=1e-6, M=3, M1=3, M2=3)


def test_smq_with_constant_service_matches_single_fixed_point(small_config):
    result = TheoryAnalyzer(ConstantServiceSampler(0.05), SETTINGS).analyze(small_config)

    per_file = build_rate_matrix(small_config).per_file
    expected = fixed_point_t1(FixedPointInput(S=1, lambda_i=per_file, ET=0.05, ET2=0.0025))
    (smq,) = result.classes
    assert smq.d_star == pytest.approx(expected, rel=1e-6)
    assert smq.ET == pytest.approx(0.05)
    assert result.iterations == 2
    assert result.d_history[0] == (0.0,)
    assert smq.mean_sojourn == pytest.approx(
        mean_sojourn(smq.d_star, smq.lambda_prime, smq.lambda_total, 0.05)
    )
    assert smq.lambda_prime < smq.lambda_total


def test_moment_estimate_uses_M_samples(small_config):
    sampler = ConstantServiceSampler(0.05)
    TheoryAnalyzer(sampler, TheorySettings(eps=1e6, M=7)).analyze(small_config)
    # one batch at d = 0 and one at the settled delay
    assert len(sampler.groups_seen) == 14


def test_analysis_is_reproducible_for_a_seed(small_config):
    a = TheoryAnalyzer(ConstantServiceSampler(), SETTINGS).analyze(small_config)
    b = TheoryAnalyzer(ConstantServiceSampler(), SETTINGS).analyze(small_config)
    assert a.d_history == b.d_history


def test_dsmq_reports_both_classes(dual_config):
    result = TheoryAnalyzer(ConstantServiceSampler(0.05), SETTINGS).analyze(dual_config)
    good, bad = result.for_class(GOOD), result.for_class(BAD)
    assert good.d_star > 0 and bad.d_star > 0
    # SMQ-B waits for C-1 good services per turn
    assert bad.mean_sojourn > good.mean_sojourn
    T_G, _, T_B, _ = result.mixed
    assert T_G == pytest.approx(0.05 + 0.05 / 2)
    assert T_B == pytest.approx(0.05 * 2 + 0.05)
    assert min(good.mean_sojourn, bad.mean_sojourn) <= result.mean_sojourn
    assert result.mean_sojourn <= max(good.mean_sojourn, bad.mean_sojourn)


def test_dsmq_class_without_traffic_reports_nan(dual_config):
    config = dual_config.replace(good_user_set=frozenset(range(4)))
    result = TheoryAnalyzer(ConstantServiceSampler(), SETTINGS).analyze(config)
    assert math.isnan(result.for_class(BAD).mean_sojourn)
    assert result.for_class(BAD).d_star == 0.0
    assert result.for_class(GOOD).mean_sojourn > 0


@pytest.mark.parametrize("kind", ["LOOPBACK", "TWO_Q_SIMULTANEOUS"])
def test_no_theory_for_other_disciplines(dual_config, kind):
    analyzer = TheoryAnalyzer(ConstantServiceSampler(), SETTINGS)
    with pytest.raises(ValueError, match="No theory"):
        analyzer.analyze(dual_config.replace(queue_kind=kind))


def test_outer_loop_cap(small_config):
    settings = TheorySettings(eps=1e-9, M=2, max_outer=1)
    with pytest.raises(NonConvergenceError):
        TheoryAnalyzer(ConstantServiceSampler(0.05), settings).analyze(small_config)


class DriftingServiceSampler(ConstantServiceSampler):
    """Service time grows by 10% with every batch of ``batch`` samples."""

    def __init__(self, service_time: float, batch: int) -> None:
        super().__init__(service_time)
        self.batch = batch

    def sample(self, groups, config, rng) -> ServiceOutcome:
        factor = 1.0 + 0.1 * (len(self.groups_seen) // self.batch)
        self.groups_seen.append(groups)
        return ServiceOutcome(solution=None, total_time=self.service_time * factor)


def test_smq_reports_moments_estimated_at_the_final_delay(small_config):
    settings = TheorySettings(eps=1e6, M=3)
    result = TheoryAnalyzer(DriftingServiceSampler(0.05, 3), settings).analyze(small_config)

    (smq,) = result.classes
    per_file = build_rate_matrix(small_config).per_file
    # d* comes from the d = 0 batch, the reported moments from the batch drawn at d*
    assert smq.d_star == pytest.approx(
        fixed_point_t1(FixedPointInput(S=1, lambda_i=per_file, ET=0.05, ET2=0.0025))
    )
    assert smq.ET == pytest.approx(0.055)
    assert smq.ET2 == pytest.approx(0.055**2)
    assert smq.mean_sojourn == pytest.approx(
        mean_sojourn(smq.d_star, smq.lambda_prime, smq.lambda_total, 0.055)
    )


def test_dsmq_reports_class_moments_estimated_at_the_final_delays(dual_config):
    settings = TheorySettings(eps=1e6, M1=3, M2=3)
    result = TheoryAnalyzer(DriftingServiceSampler(0.05, 3), settings).analyze(dual_config)

    good, bad = result.for_class(GOOD), result.for_class(BAD)
    # batches: good@0, bad@0, good@d1, bad@d2
    assert good.ET == pytest.approx(0.05 * 1.2)
    assert bad.ET == pytest.approx(0.05 * 1.3)
    assert good.mean_sojourn == pytest.approx(
        mean_sojourn(good.d_star, good.lambda_prime, good.lambda_total, 0.05 * 1.2)
    )
    T_G, _, T_B, _ = result.mixed
    assert T_G == pytest.approx(0.06 + 0.065 / 2)
    assert T_B == pytest.approx(0.06 * 2 + 0.065)
