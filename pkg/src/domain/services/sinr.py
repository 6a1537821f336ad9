"""SINR and achievable-rate formulas for the three max-min-fair transmission models.

Precoders are stored row-wise: ``w[s]`` is the length-L vector of stream s.
Rates are in bits/s/Hz.
"""

from __future__ import annotations

import math
from typing import Collection

import numpy as np
from numpy.typing import NDArray

from ..value_objects.channel import ChannelMatrix
from ..value_objects.service_groups import ServiceGroups


def _channel_array(H: ChannelMatrix | NDArray[np.complex128]) -> NDArray[np.complex128]:
    return H.H if isinstance(H, ChannelMatrix) else np.asarray(H, dtype=complex)


def received_powers(
    H: ChannelMatrix | NDArray[np.complex128], w: NDArray[np.complex128], k: int
) -> NDArray[np.float64]:
    """|h_k^H w_t|^2 for every stream t."""
    h = _channel_array(H)[:, k]
    w = np.atleast_2d(w)
    return np.abs(w @ h.conj()) ** 2


def sinr_mmf(
    H: ChannelMatrix | NDArray[np.complex128],
    w: NDArray[np.complex128],
    noise: NDArray[np.float64],
    k: int,
    s: int,
    wanted: Collection[int],
) -> float:
    """SINR of stream s at user k; only streams outside ``wanted`` interfere."""
    powers = received_powers(H, w, k)
    interference = sum(powers[t] for t in range(len(powers)) if t not in wanted)
    return float(powers[s] / (noise[k] + interference))


def sinr_sic(
    H: ChannelMatrix | NDArray[np.complex128],
    w: NDArray[np.complex128],
    noise: NDArray[np.float64],
    k: int,
    s: int,
) -> float:
    """SNR of stream s at user k when every other stream is cancelled."""
    return float(received_powers(H, w, k)[s] / noise[k])


def sinr_degraded(
    H: ChannelMatrix | NDArray[np.complex128],
    w_D: NDArray[np.complex128],
    w: NDArray[np.complex128],
    noise: NDArray[np.float64],
    k: int,
) -> float:
    """SINR of the degraded stream at user k; every designated stream interferes."""
    h = _channel_array(H)[:, k]
    signal = float(np.abs(np.vdot(h, w_D)) ** 2)
    interference = float(received_powers(H, w, k).sum()) if np.size(w) else 0.0
    return signal / (noise[k] + interference)


def mmf_rate_terms(
    groups: ServiceGroups,
    H: ChannelMatrix | NDArray[np.complex128],
    w: NDArray[np.complex128],
    noise: NDArray[np.float64],
) -> list[tuple[str, int, tuple[int, ...], float]]:
    """Per-stream and joint-decoding capacity terms of the MMF model.

    Returns:
        (kind, user, streams, capacity) where capacity is the bound on |streams| * r,
        kind is "stream" or "mac"
    """
    terms = []
    for user in groups.users:
        wanted = groups.streams_of(user)
        sinrs = {s: sinr_mmf(H, w, noise, user, s, wanted) for s in wanted}
        for subset in groups.decoding_subsets(user):
            capacity = math.log2(1.0 + sum(sinrs[j] for j in subset))
            terms.append(("stream" if len(subset) == 1 else "mac", user, subset, capacity))
    return terms


def mmf_symmetric_rate(
    groups: ServiceGroups,
    H: ChannelMatrix | NDArray[np.complex128],
    w: NDArray[np.complex128],
    noise: NDArray[np.float64],
) -> float:
    """Largest r meeting every MMF constraint for fixed precoders."""
    terms = mmf_rate_terms(groups, H, w, noise)
    return max(0.0, min(capacity / len(streams) for _, _, streams, capacity in terms))


def sic_capacity_terms(
    groups: ServiceGroups,
    H: ChannelMatrix | NDArray[np.complex128],
    w: NDArray[np.complex128],
    noise: NDArray[np.float64],
) -> list[tuple[int, tuple[int, ...], float]]:
    """MAC region of every served user: (user, stream subset, capacity) for nonempty subsets."""
    terms = []
    for user in groups.users:
        snr = received_powers(H, w, user) / noise[user]
        for subset in groups.stream_subsets():
            terms.append((user, subset, math.log2(1.0 + float(snr[list(subset)].sum()))))
    return terms


def rs_rate_terms(
    groups: ServiceGroups,
    H: ChannelMatrix | NDArray[np.complex128],
    w: NDArray[np.complex128],
    w_D: NDArray[np.complex128],
    alpha: NDArray[np.float64],
    noise: NDArray[np.float64],
) -> list[tuple[str, int, tuple[int, ...], float, float]]:
    """Rate-splitting constraint terms for fixed precoders and split fractions.

    Returns:
        (kind, user, streams, load, capacity): constraint rho * load <= capacity where rho is
        the symmetric rate in bits/s/Hz-equivalent (rho = r * F / B)
    """
    terms = []
    degraded_load = float(np.sum(alpha))
    for user in groups.users:
        terms.append(
            (
                "degraded",
                user,
                tuple(range(groups.n_streams)),
                degraded_load,
                math.log2(1.0 + sinr_degraded(H, w_D, w, noise, user)),
            )
        )
    for kind, user, streams, capacity in mmf_rate_terms(groups, H, w, noise):
        load = float(sum(1.0 - alpha[j] for j in streams))
        terms.append(("stream" if kind == "stream" else "mac", user, streams, load, capacity))
    return terms


def rs_symmetric_rate(
    groups: ServiceGroups,
    H: ChannelMatrix | NDArray[np.complex128],
    w: NDArray[np.complex128],
    w_D: NDArray[np.complex128],
    alpha: NDArray[np.float64],
    noise: NDArray[np.float64],
) -> float:
    """Largest rho (bits/s/Hz-equivalent) meeting every rate-splitting constraint."""
    bounds = [
        capacity / load
        for _, _, _, load, capacity in rs_rate_terms(groups, H, w, w_D, alpha, noise)
        if load > 1e-12
    ]
    return max(0.0, min(bounds)) if bounds else 0.0


def per_user_rates(
    groups: ServiceGroups,
    H: ChannelMatrix | NDArray[np.complex128],
    w: NDArray[np.complex128],
    noise: NDArray[np.float64],
    cancel_all: bool = False,
) -> dict[int, float]:
    """R_k: worst single-stream rate over the streams user k wants.

    With ``cancel_all`` every other stream is assumed cancelled (SIC receivers).
    """
    rates = {}
    for user in groups.users:
        wanted = groups.streams_of(user)
        if cancel_all:
            values = [sinr_sic(H, w, noise, user, s) for s in range(groups.n_streams)]
        else:
            values = [sinr_mmf(H, w, noise, user, s, wanted) for s in wanted]
        rates[user] = math.log2(1.0 + min(values))
    return rates
