"""SLSQP Beamformer Adapter - Implements IBeamformer with multi-start SciPy SLSQP."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import OptimizeResult, linprog, minimize

from src.application.ports.i_beamformer import IBeamformer
from src.domain.services.sinr import (
    mmf_symmetric_rate,
    per_user_rates,
    rs_rate_terms,
    rs_symmetric_rate,
    sic_capacity_terms,
)
from src.domain.services.solution_verifier import SolutionVerifier
from src.domain.value_objects.beamformer_solution import BeamformerSolution
from src.domain.value_objects.channel import ChannelMatrix
from src.domain.value_objects.service_groups import ServiceGroups
from src.domain.value_objects.solver_settings import SolverSettings
from src.domain.value_objects.system_config import Scheme, SystemConfig
from src.infrastructure.adapters.solver_trace_writer import SolverTraceWriter

logger = logging.getLogger(__name__)

_LN2 = math.log(2.0)

# Rates from the re-allocation LPs are shrunk by this factor before verification
_RATE_MARGIN = 1e-9

# Power share of the degraded stream in rate-splitting starting points
_DEGRADED_SHARE = 0.2
_WARM_DEGRADED_SHARE = 1e-3


@dataclass(frozen=True)
class _RateRows:
    """Log-form rate constraints, one row each.

    Row c reads log2(1 + I_c + S_c) - log2(1 + I_c) >= z * (z_weight + alpha_coef @ alpha)
    + rate_coef @ R, where S_c and I_c sum the received powers of the beams marked in
    ``signal`` and ``interference`` at served user ``rows[c]``.
    """

    rows: NDArray[np.int64]
    signal: NDArray[np.float64]
    interference: NDArray[np.float64]
    z_weight: NDArray[np.float64]
    alpha_coef: NDArray[np.float64]
    rate_coef: NDArray[np.float64]


class _Problem:
    """Nonlinear program of one scheme for one channel realization.

    The variable vector is [z?, R (SIC), alpha (RS), Re W, Im W] where W stacks the
    designated precoders and, for rate splitting, the degraded precoder as last row.
    Channels are divided by the noise standard deviation so every user sees unit noise.
    """

    def __init__(
        self,
        scheme: Scheme,
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
        settings: SolverSettings,
    ) -> None:
        self.scheme = scheme
        self.groups = groups
        self.users = groups.users
        noise = np.asarray(config.noise, dtype=float)
        users = list(self.users)
        self.G = H.H[:, users] / np.sqrt(noise[users])
        self.Gc = self.G.conj().T
        self.L = H.L
        self.n = groups.n_streams
        self.nb = self.n + (1 if scheme is Scheme.MMF_RS else 0)
        self.P = config.P
        self.tol = settings.constraint_tol
        self.has_z = scheme is not Scheme.MMF_SIC
        self.n_rates = self.n if scheme is Scheme.MMF_SIC else 0
        self.n_alpha = self.n if scheme is Scheme.MMF_RS else 0
        self.offset = int(self.has_z) + self.n_rates + self.n_alpha
        self.size = self.offset + 2 * self.nb * self.L
        self.constraints = self._build_rows()

    def _build_rows(self) -> _RateRows:
        n, nb = self.n, self.nb
        rows, signal, interference, z_weight, alpha_coef, rate_coef = [], [], [], [], [], []

        def add(row, sig, intf, zw=0.0, ac=None, rc=None):
            sig_mask, intf_mask = np.zeros(nb), np.zeros(nb)
            sig_mask[list(sig)] = 1.0
            intf_mask[list(intf)] = 1.0
            rows.append(row)
            signal.append(sig_mask)
            interference.append(intf_mask)
            z_weight.append(zw)
            alpha_coef.append(np.zeros(n) if ac is None else ac)
            rate_coef.append(np.zeros(n) if rc is None else rc)

        for row, user in enumerate(self.users):
            if self.scheme is Scheme.MMF_SIC:
                for subset in self.groups.stream_subsets():
                    rc = np.zeros(n)
                    rc[list(subset)] = 1.0
                    add(row, subset, (), rc=rc)
                continue

            wanted = self.groups.streams_of(user)
            others = [t for t in range(n) if t not in wanted]
            for subset in self.groups.decoding_subsets(user):
                ac = None
                if self.scheme is Scheme.MMF_RS:
                    ac = np.zeros(n)
                    ac[list(subset)] = -1.0
                add(row, subset, others, zw=float(len(subset)), ac=ac)
            if self.scheme is Scheme.MMF_RS:
                add(row, (n,), range(n), ac=np.ones(n))

        return _RateRows(
            rows=np.asarray(rows, dtype=np.int64),
            signal=np.asarray(signal),
            interference=np.asarray(interference),
            z_weight=np.asarray(z_weight),
            alpha_coef=np.asarray(alpha_coef).reshape(len(rows), n)[:, : self.n_alpha],
            rate_coef=np.asarray(rate_coef).reshape(len(rows), n)[:, : self.n_rates],
        )

    # Variable vector

    def split(self, x: NDArray) -> tuple[float, NDArray, NDArray, NDArray[np.complex128]]:
        i = int(self.has_z)
        z = float(x[0]) if self.has_z else 0.0
        R = x[i : i + self.n_rates]
        i += self.n_rates
        alpha = x[i : i + self.n_alpha]
        half = self.nb * self.L
        W = (x[self.offset : self.offset + half] + 1j * x[self.offset + half :]).reshape(
            self.nb, self.L
        )
        return z, R, alpha, W

    def pack(
        self,
        W: NDArray[np.complex128],
        z: float = 0.0,
        R: NDArray | None = None,
        alpha: NDArray | None = None,
    ) -> NDArray[np.float64]:
        parts = []
        if self.has_z:
            parts.append([z])
        if self.n_rates:
            parts.append(np.zeros(self.n_rates) if R is None else R)
        if self.n_alpha:
            parts.append(np.zeros(self.n_alpha) if alpha is None else alpha)
        parts.extend([W.real.ravel(), W.imag.ravel()])
        return np.concatenate([np.asarray(p, dtype=float) for p in parts])

    def bounds(self) -> list[tuple[float | None, float | None]]:
        bounds: list[tuple[float | None, float | None]] = []
        if self.has_z:
            bounds.append((0.0, None))
        bounds += [(0.0, None)] * self.n_rates
        bounds += [(0.0, 1.0)] * self.n_alpha
        bounds += [(None, None)] * (2 * self.nb * self.L)
        return bounds

    # Objective and constraints

    def _powers(self, W: NDArray[np.complex128]):
        c = self.constraints
        A = self.Gc @ W.T
        Pu = (np.abs(A) ** 2)[c.rows]
        return A, (Pu * c.interference).sum(axis=1), (Pu * c.signal).sum(axis=1)

    def objective(self, x: NDArray) -> tuple[float, NDArray]:
        grad = np.zeros(self.size)
        if self.has_z:
            grad[0] = -1.0
            return -float(x[0]), grad
        grad[: self.n_rates] = -1.0
        return -float(np.sum(x[: self.n_rates])), grad

    def inequalities(self, x: NDArray) -> NDArray:
        c = self.constraints
        z, R, alpha, W = self.split(x)
        _, I, S = self._powers(W)
        capacity = np.log2(1.0 + I + S) - np.log2(1.0 + I)
        load = z * (c.z_weight + c.alpha_coef @ alpha) + c.rate_coef @ R
        power = self.P - float(np.sum(x[self.offset :] ** 2))
        return np.concatenate([capacity - load - self.tol, [power]])

    def jacobian(self, x: NDArray) -> NDArray:
        c = self.constraints
        m = c.rows.size
        z, _, alpha, W = self.split(x)
        A, I, S = self._powers(W)
        jac = np.zeros((m + 1, self.size))

        if self.has_z:
            jac[:m, 0] = -(c.z_weight + c.alpha_coef @ alpha)
        i = int(self.has_z)
        jac[:m, i : i + self.n_rates] = -c.rate_coef
        i += self.n_rates
        jac[:m, i : i + self.n_alpha] = -z * c.alpha_coef

        total = 1.0 / (_LN2 * (1.0 + I + S))
        base = 1.0 / (_LN2 * (1.0 + I))
        coef = c.signal * total[:, None] + c.interference * (total - base)[:, None]
        # d|g^H w|^2 / d Re(w) = 2 Re((g^H w) g), likewise for Im
        D = A[c.rows][:, :, None] * self.G[:, c.rows].T[:, None, :]
        half = self.nb * self.L
        jac[:m, self.offset : self.offset + half] = (2.0 * coef[:, :, None] * D.real).reshape(
            m, half
        )
        jac[:m, self.offset + half :] = (2.0 * coef[:, :, None] * D.imag).reshape(m, half)
        jac[m, self.offset :] = -2.0 * x[self.offset :]
        return jac

    def lift(self, W: NDArray[np.complex128], alpha: NDArray | None = None) -> NDArray:
        """Starting vector whose auxiliary variables are the largest the precoders support."""
        c = self.constraints
        alpha = np.zeros(self.n_alpha) if alpha is None else alpha
        _, I, S = self._powers(W)
        capacity = np.log2(1.0 + I + S) - np.log2(1.0 + I)
        if not self.has_z:
            r0 = max(0.0, float(np.min(capacity / c.rate_coef.sum(axis=1))))
            return self.pack(W, R=np.full(self.n, 0.99 * r0))
        unit = c.z_weight + c.alpha_coef @ alpha
        active = unit > 1e-12
        z0 = float(np.min(capacity[active] / unit[active])) if np.any(active) else 0.0
        return self.pack(W, z=0.99 * max(0.0, z0), alpha=alpha)

    def optimize(self, x0: NDArray, settings: SolverSettings) -> OptimizeResult:
        return minimize(
            self.objective,
            x0,
            jac=True,
            method="SLSQP",
            bounds=self.bounds(),
            constraints=[{"type": "ineq", "fun": self.inequalities, "jac": self.jacobian}],
            options={"maxiter": settings.maxiter, "ftol": settings.ftol},
        )

    # Starting points

    def _direction(self, users) -> NDArray[np.complex128]:
        index = [self.users.index(u) for u in users]
        cols = self.G[:, index]
        return (cols / np.linalg.norm(cols, axis=0)).sum(axis=1)

    def _with_power(self, W: NDArray[np.complex128], degraded_share: float) -> NDArray:
        W = W.copy()
        norms = np.linalg.norm(W, axis=1)
        norms[norms == 0] = 1.0
        W /= norms[:, None]
        if self.nb > self.n:
            W[: self.n] *= math.sqrt((1.0 - degraded_share) * self.P / self.n)
            W[self.n] *= math.sqrt(degraded_share * self.P)
        else:
            W *= math.sqrt(self.P / self.nb)
        return W

    def mrt_start(self) -> NDArray[np.complex128]:
        """Matched filter towards every requester of each stream, equal power."""
        W = np.zeros((self.nb, self.L), dtype=complex)
        for s, users in enumerate(self.groups.user_sets):
            W[s] = self._direction(users)
        if self.nb > self.n:
            W[self.n] = self._direction(self.users)
        return self._with_power(W, _DEGRADED_SHARE)

    def projected_start(self) -> NDArray[np.complex128] | None:
        """Matched filter projected off the channels of users who do not want the stream."""
        W = self.mrt_start()
        projected = False
        for s, users in enumerate(self.groups.user_sets):
            others = [i for i, u in enumerate(self.users) if u not in users]
            if not others or len(others) >= self.L:
                continue
            Q, _ = np.linalg.qr(self.G[:, others])
            candidate = W[s] - Q @ (Q.conj().T @ W[s])
            if np.linalg.norm(candidate) > 1e-9 * np.linalg.norm(W[s]):
                W[s] = candidate
                projected = True
        return self._with_power(W, _DEGRADED_SHARE) if projected else None

    def random_start(self, rng: np.random.Generator) -> NDArray[np.complex128]:
        W = rng.standard_normal((self.nb, self.L)) + 1j * rng.standard_normal((self.nb, self.L))
        return self._with_power(W, _DEGRADED_SHARE)

    def warm_rs_start(self, mmf_w: NDArray[np.complex128]) -> NDArray[np.complex128]:
        """MMF precoders with a small degraded beam towards all served users."""
        W = np.vstack([mmf_w, self._direction(self.users)[None, :]])
        if np.linalg.norm(mmf_w) == 0:
            return self._with_power(W, _DEGRADED_SHARE)
        W[: self.n] *= math.sqrt(1.0 - _WARM_DEGRADED_SHARE)
        W[self.n] *= math.sqrt(_WARM_DEGRADED_SHARE * self.P) / np.linalg.norm(W[self.n])
        return W


class SlsqpBeamformer(IBeamformer):
    """Multi-start SLSQP solver for the MMF, MMF-SIC and MMF-RS reformulations.

    Every local solution is re-scaled to the power budget, its rate variables are
    recomputed exactly from the precoders, and only candidates that pass the
    independent SolutionVerifier compete. When none passes, the degenerate
    w = 0 solution is returned.
    """

    def __init__(
        self,
        settings: SolverSettings | None = None,
        trace_writer: SolverTraceWriter | None = None,
    ) -> None:
        """Initialize beamformer.

        Args:
            settings: Multi-start and tolerance settings
            trace_writer: Optional sink receiving one record per solve
        """
        self.settings = settings or SolverSettings()
        self.verifier = SolutionVerifier(self.settings.verify_tol)
        self.trace_writer = trace_writer
        logger.info(
            f"Initialized SLSQP beamformer (starts: {self.settings.n_starts}, "
            f"maxiter: {self.settings.maxiter})"
        )

    def solve_mmf(
        self,
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
        rng: np.random.Generator | None = None,
    ) -> BeamformerSolution:
        return self._solve(Scheme.MMF, groups, H, config, rng)

    def solve_mmf_sic(
        self,
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
        rng: np.random.Generator | None = None,
    ) -> BeamformerSolution:
        return self._solve(Scheme.MMF_SIC, groups, H, config, rng)

    def solve_mmf_rs(
        self,
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
        rng: np.random.Generator | None = None,
    ) -> BeamformerSolution:
        rng = rng if rng is not None else np.random.default_rng(0)
        mmf = self._solve(Scheme.MMF, groups, H, config, rng)
        problem = _Problem(Scheme.MMF_RS, groups, H, config, self.settings)
        embedded = np.vstack([mmf.w, np.zeros((1, H.L), dtype=complex)])
        return self._solve(
            Scheme.MMF_RS,
            groups,
            H,
            config,
            rng,
            problem=problem,
            extra_starts=[problem.warm_rs_start(mmf.w)],
            extra_candidates=[embedded],
        )

    def _solve(
        self,
        scheme: Scheme,
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
        rng: np.random.Generator | None,
        problem: _Problem | None = None,
        extra_starts: list[NDArray[np.complex128]] | None = None,
        extra_candidates: list[NDArray[np.complex128]] | None = None,
    ) -> BeamformerSolution:
        settings = self.settings
        rng = rng if rng is not None else np.random.default_rng(0)
        problem = problem or _Problem(scheme, groups, H, config, settings)

        starts = list(extra_starts or [])
        starts.append(problem.mrt_start())
        projected = problem.projected_start()
        if projected is not None:
            starts.append(projected)
        starts = starts[: settings.n_starts]
        while len(starts) < settings.n_starts:
            starts.append(problem.random_start(rng))

        candidates = []
        objectives: list[float] = []
        converged = 0
        for W0 in starts:
            try:
                result = problem.optimize(problem.lift(W0), settings)
            except (ValueError, np.linalg.LinAlgError) as e:
                logger.debug(f"{scheme.value} local solve failed: {e}")
                continue
            converged += int(result.success)
            objectives.append(float(result.fun))
            candidates.append(problem.split(result.x)[3])
        candidates.extend(extra_candidates or [])

        best: BeamformerSolution | None = None
        best_violation = math.nan
        verified = 0
        for W in candidates:
            solution = self._finalize(scheme, W, groups, H, config)
            if solution is None:
                continue
            report = self.verifier.verify(scheme, groups, H, solution, config)
            if not report.ok:
                logger.debug(
                    f"Rejected {scheme.value} candidate: "
                    + "; ".join(str(v) for v in report.violations)
                )
                continue
            verified += 1
            if best is None or solution.r_star > best.r_star:
                best, best_violation = solution, report.max_violation

        if best is None:
            logger.warning(
                f"No verified {scheme.value} solution for {groups.n_streams} stream(s), "
                f"{len(groups.users)} user(s); using w = 0"
            )
            best = BeamformerSolution.degenerate(scheme, groups.n_streams, H.L)

        if self.trace_writer is not None:
            self.trace_writer.write(
                {
                    "scheme": scheme.value,
                    "streams": groups.n_streams,
                    "users": list(groups.users),
                    "starts": len(starts),
                    "converged": converged,
                    "objectives": objectives,
                    "verified": verified,
                    "max_violation": best_violation,
                    "r_star": best.r_star,
                    "T_star": best.T_star,
                }
            )
        return best

    def _finalize(
        self,
        scheme: Scheme,
        W: NDArray[np.complex128],
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
    ) -> BeamformerSolution | None:
        """Scale to the power budget and recompute rates exactly; None for a zero rate."""
        if not np.all(np.isfinite(W)):
            return None
        total = float(np.sum(np.abs(W) ** 2))
        if total > config.P:
            W = W * math.sqrt(config.P / total)
        noise = np.asarray(config.noise, dtype=float)
        n = groups.n_streams

        if scheme is Scheme.MMF:
            r = mmf_symmetric_rate(groups, H, W, noise)
            if r <= 0:
                return None
            return BeamformerSolution(
                scheme=scheme,
                w=W,
                r_star=r,
                T_star=config.service_time_for_rate(r),
                per_user_rates=per_user_rates(groups, H, W, noise),
            )

        if scheme is Scheme.MMF_SIC:
            return self._finalize_sic(W, groups, H, config, noise)

        w, w_D = W[:n], W[n]
        terms = rs_rate_terms(groups, H, w, w_D, np.zeros(n), noise)
        # LP over (rho, u = rho * alpha)
        A_ub, b_ub = [], []
        for kind, _, streams, _, capacity in terms:
            row = np.zeros(n + 1)
            if kind == "degraded":
                row[1:] = 1.0
            else:
                row[0] = len(streams)
                row[[1 + j for j in streams]] = -1.0
            A_ub.append(row)
            b_ub.append(capacity)
        for j in range(n):
            row = np.zeros(n + 1)
            row[0], row[1 + j] = -1.0, 1.0
            A_ub.append(row)
            b_ub.append(0.0)
        c = np.zeros(n + 1)
        c[0] = -1.0
        lp = linprog(c, A_ub=np.asarray(A_ub), b_ub=b_ub, bounds=[(0, None)] * (n + 1))
        if not lp.success or lp.x[0] <= 0:
            return None
        alpha = np.clip(lp.x[1:] / lp.x[0], 0.0, 1.0)
        rho = rs_symmetric_rate(groups, H, w, w_D, alpha, noise) * (1.0 - _RATE_MARGIN)
        if rho <= 0:
            return None
        r = rho / config.file_service_scale
        return BeamformerSolution(
            scheme=scheme,
            w=w,
            r_star=r,
            T_star=1.0 / r,
            w_D=w_D,
            alpha=alpha,
            per_user_rates=per_user_rates(groups, H, w, noise),
        )

    @staticmethod
    def _finalize_sic(
        W: NDArray[np.complex128],
        groups: ServiceGroups,
        H: ChannelMatrix,
        config: SystemConfig,
        noise: NDArray[np.float64],
    ) -> BeamformerSolution | None:
        n = groups.n_streams
        terms = sic_capacity_terms(groups, H, W, noise)
        A_ub = np.zeros((len(terms), n))
        for row, (_, subset, _) in enumerate(terms):
            A_ub[row, list(subset)] = 1.0
        b_ub = [capacity for _, _, capacity in terms]
        lp = linprog(-np.ones(n), A_ub=A_ub, b_ub=b_ub, bounds=[(0, None)] * n)
        if not lp.success:
            return None
        rates = np.clip(lp.x, 0.0, None) * (1.0 - _RATE_MARGIN)
        total = float(rates.sum())
        if total <= 0:
            return None
        r = total / n
        return BeamformerSolution(
            scheme=Scheme.MMF_SIC,
            w=W,
            r_star=r,
            T_star=config.service_time_for_rate(r),
            beta=rates / total,
            stream_rates=rates,
            per_user_rates=per_user_rates(groups, H, W, noise, cancel_all=True),
        )
