"""
Adaptive ansatz growth from an operator pool.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

import numpy as np
import numpy.typing as npt
from scipy import linalg

from src.avqite.equations_of_motion import EomSnapshot, EquationsOfMotion
from src.avqite.simulator import AnsatzSimulator
from src.core.configs.avqite import AvqiteConfig
from src.core.entities.ansatz import Ansatz
from src.core.errors import GrowthStalledError
from src.core.main_config import settings
from src.core.types.eom_solution import EomSolution
from src.core.types.enums.tie_break import TieBreak
from src.core.types.operator_pool import OperatorPool
from src.core.types.pauli_string import PauliString
from src.pauli.pauli_sum import PauliSum

logger = logging.getLogger(__name__)


class GeneratorSelector:
    """
    Picks the pool generator whose insertion (angle 0, at the end of the
    circuit) minimizes the McLachlan distance of the re-solved equations.

    Appending one parameter borders the regularized metric ``A`` with a
    column ``b`` and corner ``c``; the bordered system is solved through the
    Schur complement ``s = c - b^T A^{-1} b``, so each candidate costs one
    back-substitution instead of a fresh factorization.
    """

    def __init__(self, options: Optional[AvqiteConfig] = None) -> None:
        self.options = options or settings.avqite

    # ------------------------------------------------------------------ #
    # Scoring
    # ------------------------------------------------------------------ #
    def score_candidates(
        self,
        snap: EomSnapshot,
        solution: EomSolution,
        candidates: Sequence[PauliString],
    ) -> npt.NDArray[np.float64]:
        """L^2 after appending each candidate and re-solving, unclipped."""
        lam = self.options.tikhonov
        n_theta = solution.theta_dot.size
        base = snap.variance - float(np.dot(snap.gradient, solution.theta_dot))
        factor = (
            linalg.cho_factor(snap.metric + lam * np.eye(n_theta)) if n_theta else None
        )
        scores = np.empty(len(candidates))
        chunk = max(1, self.options.candidate_chunk)
        for start in range(0, len(candidates), chunk):
            block = candidates[start : start + chunk]
            d = AnsatzSimulator.candidate_derivatives(block, snap.psi)
            o_d = d @ snap.psi.conj()
            c = (np.sum(np.abs(d) ** 2, axis=1) + o_d**2).real + lam
            v = -(d.conj() @ snap.h_psi).real
            if n_theta:
                b = (snap.derivs.conj() @ d.T + np.outer(snap.overlaps, o_d)).real
                w = linalg.cho_solve(factor, b)
                s = c - np.sum(b * w, axis=0)
                r = v - b.T @ solution.theta_dot
            else:
                s, r = c, v
            gain = r**2 / s
            scores[start : start + len(block)] = 2.0 * (base - gain)
        return scores

    def pick(self, scores: npt.NDArray[np.float64], pool: OperatorPool) -> int:
        """Index of the winner; near-ties are resolved by the configured policy."""
        best = float(np.min(scores))
        tied = np.flatnonzero(scores <= best + self.options.tie_tolerance)
        if self.options.tie_break == TieBreak.ALPHABETICAL:
            return int(min(tied, key=lambda k: (pool.generators[k].label, k)))
        return int(min(tied, key=lambda k: (pool.generators[k].weight, k)))

    # ------------------------------------------------------------------ #
    # Growth
    # ------------------------------------------------------------------ #
    def grow_from(
        self,
        ansatz: Ansatz,
        snap: EomSnapshot,
        solution: EomSolution,
        pool: OperatorPool,
        h_gc: PauliSum,
        threshold: Optional[float] = None,
    ) -> tuple[EomSnapshot, EomSolution, list[PauliString]]:
        """
        Append generators to ``ansatz`` in place until L^2 <= threshold.

        Raises:
            GrowthStalledError: if no candidate improves L^2 and the options
                ask to fail on stalls.
        """
        threshold = self.options.threshold if threshold is None else threshold
        if threshold <= 0:
            raise ValueError(f"Growth threshold must be > 0, got {threshold}")
        appended: list[PauliString] = []
        while solution.mclachlan_sq > threshold:
            if len(pool) == 0:
                return self._stalled(snap, solution, appended, "empty pool")
            scores = self.score_candidates(snap, solution, pool.generators)
            k = self.pick(scores, pool)
            improvement = solution.mclachlan_sq - float(scores[k])
            if improvement <= self.options.min_improvement:
                return self._stalled(snap, solution, appended, f"best gain {improvement:.3e}")
            generator = pool.generators[k]
            ansatz.append(generator, 0.0)
            appended.append(generator)
            d = AnsatzSimulator.candidate_derivatives([generator], snap.psi)
            snap = EquationsOfMotion.snapshot(snap.psi, np.vstack([snap.derivs, d]), h_gc)
            solution = EquationsOfMotion.solve(snap, self.options.tikhonov)
            logger.debug(
                "Appended %s (N_theta=%d): L^2 %.3e", generator.label, ansatz.n_theta,
                solution.mclachlan_sq,
            )
        return snap, solution, appended

    def grow(
        self,
        ansatz: Ansatz,
        pool: OperatorPool,
        h_gc: PauliSum,
        threshold: Optional[float] = None,
    ) -> tuple[Ansatz, list[PauliString]]:
        """Grow a copy of ``ansatz``; returns it with the appended generators in order."""
        grown = ansatz.copy()
        psi, derivs = AnsatzSimulator.state_and_derivatives(grown)
        snap = EquationsOfMotion.snapshot(psi, derivs, h_gc)
        solution = EquationsOfMotion.solve(snap, self.options.tikhonov)
        _, _, appended = self.grow_from(grown, snap, solution, pool, h_gc, threshold)
        return grown, appended

    def _stalled(
        self,
        snap: EomSnapshot,
        solution: EomSolution,
        appended: list[PauliString],
        reason: str,
    ) -> tuple[EomSnapshot, EomSolution, list[PauliString]]:
        message = f"Ansatz growth stalled at L^2={solution.mclachlan_sq:.3e} ({reason})"
        if self.options.fail_on_stall:
            raise GrowthStalledError(message, solution.mclachlan_sq)
        logger.warning(message)
        return snap, solution, appended


def grow(
    ansatz: Ansatz, pool: OperatorPool, h_gc: PauliSum, threshold: Optional[float] = None
) -> tuple[Ansatz, list[PauliString]]:
    return GeneratorSelector().grow(ansatz, pool, h_gc, threshold)
