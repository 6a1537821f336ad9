"""TheoryAnalyzer - iterative mean-sojourn approximations for SMQ and DSMQ."""

from __future__ import annotations

import logging
import math

import numpy as np

from src.application.dtos.theory_settings import TheorySettings
from src.application.ports.i_service_time_sampler import IServiceTimeSampler
from src.domain.exceptions import NonConvergenceError
from src.domain.services.fixed_point import (
    dsmq_mixed_moments,
    effective_rate,
    fixed_point_t1,
    mean_sojourn,
)
from src.domain.services.popularity import build_rate_matrix
from src.domain.services.user_distribution import sample_head_users
from src.domain.value_objects.rate_matrix import RateMatrix
from src.domain.value_objects.service_groups import ServiceGroups
from src.domain.value_objects.system_config import ALL, BAD, GOOD, QueueKind, SystemConfig
from src.domain.value_objects.theory import (
    ClassTheory,
    FixedPointInput,
    MomentEstimate,
    TheoryResult,
    UserDistributionSpec,
)

logger = logging.getLogger(__name__)

# Substream tags of default_rng([seed, outer_pass, tag])
_SMQ_STREAM, _GOOD_STREAM, _BAD_STREAM = 0, 1, 2


def _silent_class(user_class: str) -> ClassTheory:
    """A class without traffic: d stays 0 and the mean sojourn is undefined."""
    return ClassTheory(user_class, 0.0, math.nan, math.nan, math.nan, 0.0, 0.0)


class TheoryAnalyzer:
    """Alternates Type-1 fixed points with Monte-Carlo service-moment estimates.

    Each outer pass solves the fixed point with the current moments to obtain
    a new delay d, then re-estimates the moments at d from sampled
    head-of-line user sets and channels. The loop stops when successive
    delays differ by less than ``eps``; the reported moments and mean sojourn
    use the moments estimated at the final d.
    """

    def __init__(
        self, sampler: IServiceTimeSampler, settings: TheorySettings | None = None
    ) -> None:
        self.sampler = sampler
        self.settings = settings or TheorySettings()

    def estimate_moments(
        self,
        spec: UserDistributionSpec,
        config: SystemConfig,
        M: int,
        rng: np.random.Generator,
    ) -> MomentEstimate:
        """Sample M head-of-line services and return their first two moments.

        The scheme, channel statistics and redraw rule come from ``config``.
        """
        if M < 1:
            raise ValueError(f"M must be at least 1, got {M}")
        times = np.empty(M)
        for m in range(M):
            head = sample_head_users(spec, rng)
            groups = ServiceGroups(files=head.files, user_sets=head.user_sets)
            times[m] = self.sampler.sample(groups, config, rng).total_time
        return MomentEstimate.from_samples(times)

    def analyze(self, config: SystemConfig) -> TheoryResult:
        """Dispatch on the queue discipline (SMQ or DSMQ)."""
        if config.queue_kind is QueueKind.SMQ:
            return self.analyze_smq(config)
        if config.queue_kind is QueueKind.DSMQ:
            return self.analyze_dsmq(config)
        raise ValueError(f"No theory for queue kind {config.queue_kind.value}")

    def _rng(self, outer: int, tag: int) -> np.random.Generator:
        return np.random.default_rng([self.settings.seed, outer, tag])

    def _streams(self, rates: RateMatrix, S: int) -> int:
        return max(1, min(S, int(np.count_nonzero(rates.per_file > 0))))

    def analyze_smq(self, config: SystemConfig) -> TheoryResult:
        """Mean sojourn of a single multicast queue.

        Raises:
            NonConvergenceError: If the outer loop does not settle within max_outer passes
            FixedPointDivergence: If a fixed point leaves the stable region
        """
        settings = self.settings
        rates = build_rate_matrix(config)
        if rates.total <= 0:
            nan_class = _silent_class(ALL)
            return TheoryResult(classes=(nan_class,), iterations=0)

        S = self._streams(rates, config.S)
        lambda_i = rates.per_file
        d = 0.0
        history = [(d,)]
        moments = self.estimate_moments(
            UserDistributionSpec.create(d, rates, S), config, settings.M, self._rng(0, _SMQ_STREAM)
        )
        for outer in range(1, settings.max_outer + 1):
            data = FixedPointInput(S=S, lambda_i=lambda_i, ET=moments.ET, ET2=moments.ET2)
            d_next = fixed_point_t1(data, settings.tol)
            history.append((d_next,))
            logger.info(
                f"Theory pass {outer}: ET={moments.ET:.4g}s ET2={moments.ET2:.4g}s^2 "
                f"d={d_next:.4g}s"
            )
            settled = abs(d_next - d) < settings.eps
            d = d_next
            # Moments are always re-estimated at the new d; the output uses T(d*)
            moments = self.estimate_moments(
                UserDistributionSpec.create(d, rates, S),
                config,
                settings.M,
                self._rng(outer, _SMQ_STREAM),
            )
            if settled:
                break
        else:
            raise NonConvergenceError(
                f"SMQ theory did not settle within {settings.max_outer} passes (last d={d:.4g}s)"
            )

        lambda_prime = float(np.sum(effective_rate(lambda_i, d)))
        result = ClassTheory(
            user_class=ALL,
            d_star=d,
            ET=moments.ET,
            ET2=moments.ET2,
            mean_sojourn=mean_sojourn(d, lambda_prime, rates.total, moments.ET),
            lambda_prime=lambda_prime,
            lambda_total=rates.total,
        )
        return TheoryResult(
            classes=(result,), iterations=len(history) - 1, d_history=tuple(history)
        )

    def analyze_dsmq(self, config: SystemConfig) -> TheoryResult:
        """Mean sojourn of the good and bad class queues under E-limited polling.

        Each class keeps its own Type-1 delay; the classes interact only through
        the mixed service moments. A class without traffic keeps d = 0 and
        reports NaN.
        """
        settings = self.settings
        rates = build_rate_matrix(config)
        class_rates = {
            GOOD: rates.restricted_to(config.good_user_set),
            BAD: rates.restricted_to(config.bad_user_set),
        }
        samples = {GOOD: settings.M1, BAD: settings.M2}
        tags = {GOOD: _GOOD_STREAM, BAD: _BAD_STREAM}
        active = [c for c in (GOOD, BAD) if class_rates[c].total > 0]
        streams = {c: self._streams(class_rates[c], config.S) for c in (GOOD, BAD)}

        def estimate(user_class: str, d: float, outer: int) -> MomentEstimate | None:
            if user_class not in active:
                return None
            spec = UserDistributionSpec.create(d, class_rates[user_class], streams[user_class])
            return self.estimate_moments(
                spec, config, samples[user_class], self._rng(outer, tags[user_class])
            )

        d = {GOOD: 0.0, BAD: 0.0}
        history = [(d[GOOD], d[BAD])]
        moments = {c: estimate(c, 0.0, 0) for c in (GOOD, BAD)}
        mixed = (math.nan,) * 4
        for outer in range(1, settings.max_outer + 1):
            T1 = moments[GOOD] or MomentEstimate(0.0, 0.0, 0)
            T2 = moments[BAD] or MomentEstimate(0.0, 0.0, 0)
            mixed = dsmq_mixed_moments(T1.ET, T1.ET2, T2.ET, T2.ET2, config.C)
            class_moments = {GOOD: mixed[0:2], BAD: mixed[2:4]}

            d_next = dict(d)
            for user_class in active:
                ET, ET2 = class_moments[user_class]
                data = FixedPointInput(
                    S=streams[user_class],
                    lambda_i=class_rates[user_class].per_file,
                    ET=ET,
                    ET2=ET2,
                )
                d_next[user_class] = fixed_point_t1(data, settings.tol)
            history.append((d_next[GOOD], d_next[BAD]))
            logger.info(
                f"DSMQ theory pass {outer}: T_G={mixed[0]:.4g}s T_B={mixed[2]:.4g}s "
                f"d1={d_next[GOOD]:.4g}s d2={d_next[BAD]:.4g}s"
            )
            settled = all(abs(d_next[c] - d[c]) < settings.eps for c in (GOOD, BAD))
            d = d_next
            moments = {c: estimate(c, d[c], outer) for c in (GOOD, BAD)}
            if settled:
                break
        else:
            raise NonConvergenceError(
                f"DSMQ theory did not settle within {settings.max_outer} passes "
                f"(last d1={d[GOOD]:.4g}s, d2={d[BAD]:.4g}s)"
            )

        T1 = moments[GOOD] or MomentEstimate(0.0, 0.0, 0)
        T2 = moments[BAD] or MomentEstimate(0.0, 0.0, 0)
        mixed = dsmq_mixed_moments(T1.ET, T1.ET2, T2.ET, T2.ET2, config.C)

        results = []
        for user_class in (GOOD, BAD):
            class_moment = moments[user_class]
            class_total = class_rates[user_class].total
            if class_moment is None:
                results.append(_silent_class(user_class))
                continue
            lambda_prime = float(
                np.sum(effective_rate(class_rates[user_class].per_file, d[user_class]))
            )
            results.append(
                ClassTheory(
                    user_class=user_class,
                    d_star=d[user_class],
                    ET=class_moment.ET,
                    ET2=class_moment.ET2,
                    mean_sojourn=mean_sojourn(
                        d[user_class], lambda_prime, class_total, class_moment.ET
                    ),
                    lambda_prime=lambda_prime,
                    lambda_total=class_total,
                )
            )
        return TheoryResult(
            classes=tuple(results),
            iterations=len(history) - 1,
            d_history=tuple(history),
            mixed=mixed,
        )
