"""Sampling of head-of-line files and requester sets from the approximate stationary law."""

from __future__ import annotations

import numpy as np

from ..value_objects.theory import HeadOfLineSample, UserDistributionSpec


def sample_head_users(spec: UserDistributionSpec, rng: np.random.Generator) -> HeadOfLineSample:
    """Draw the first min(S, files with traffic) entries of the queue.

    Files are drawn without replacement with probability proportional to their
    Type-1 rate. For each file the Type-1 requester j is drawn from P[i, :],
    then every other user k joins independently with probability q[i, k].

    Raises:
        ValueError: If no file carries any traffic
    """
    weights = np.array(spec.lambda_prime, dtype=float)
    n_streams = min(spec.S, spec.positive_files)
    if n_streams == 0:
        raise ValueError("No file has a positive request rate; nothing to sample")

    requester = spec.requester_probabilities
    inclusion = spec.inclusion_probabilities
    K = spec.rates.K

    files: list[int] = []
    user_sets: list[frozenset[int]] = []
    for _ in range(n_streams):
        file = int(rng.choice(weights.size, p=weights / weights.sum()))
        weights[file] = 0.0
        first = int(rng.choice(K, p=requester[file]))
        joined = rng.random(K) < inclusion[file]
        joined[first] = True
        files.append(file)
        user_sets.append(frozenset(int(k) for k in np.flatnonzero(joined)))
    return HeadOfLineSample(files=tuple(files), user_sets=tuple(user_sets))
