"""
McLachlan equations of motion for variational imaginary time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt
from scipy import linalg

from src.core.entities.ansatz import Ansatz
from src.core.main_config import settings
from src.core.types.eom_solution import EomSolution
from src.core.types.statevector import Statevector
from src.avqite.simulator import AnsatzSimulator
from src.pauli.action import PauliAction
from src.pauli.pauli_sum import PauliSum


@dataclass(frozen=True, slots=True)
class EomSnapshot:
    """Everything the solver and the growth step need at one set of angles."""

    psi: Statevector
    derivs: npt.NDArray[np.complex128]
    h_psi: Statevector
    energy: float
    variance: float
    metric: npt.NDArray[np.float64]
    gradient: npt.NDArray[np.float64]
    overlaps: npt.NDArray[np.complex128]


class EquationsOfMotion:
    """
    Metric ``g_ij = Re[<d_i|d_j> + <psi|d_i><psi|d_j>]``,
    gradient ``V_i = -Re <d_i|H|psi>`` and the regularized solve
    ``(g + lambda I) theta_dot = V``.
    """

    @staticmethod
    def snapshot(
        psi: Statevector, derivs: npt.NDArray[np.complex128], h_gc: PauliSum
    ) -> EomSnapshot:
        h_psi = PauliAction.apply(h_gc, psi)
        energy = float(np.vdot(psi, h_psi).real)
        variance = float(np.vdot(h_psi, h_psi).real) - energy**2
        overlaps = derivs @ psi.conj()
        metric = (derivs.conj() @ derivs.T + np.outer(overlaps, overlaps)).real
        metric = 0.5 * (metric + metric.T)
        gradient = -(derivs.conj() @ h_psi).real
        return EomSnapshot(psi, derivs, h_psi, energy, variance, metric, gradient, overlaps)

    @staticmethod
    def metric_and_gradient(
        ansatz: Ansatz, h_gc: PauliSum
    ) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
        psi, derivs = AnsatzSimulator.state_and_derivatives(ansatz)
        snap = EquationsOfMotion.snapshot(psi, derivs, h_gc)
        return snap.metric, snap.gradient

    @staticmethod
    def solve_eom(
        g: npt.NDArray[np.float64],
        V: npt.NDArray[np.float64],
        tikhonov: Optional[float] = None,
    ) -> tuple[npt.NDArray[np.float64], float]:
        """Return ``theta_dot`` and the residual ``||g theta_dot - V||``."""
        lam = settings.avqite.tikhonov if tikhonov is None else tikhonov
        if V.size == 0:
            return np.zeros(0), 0.0
        a = g + lam * np.eye(V.size)
        theta_dot = linalg.solve(a, V, assume_a="sym")
        residual = float(np.linalg.norm(g @ theta_dot - V))
        return theta_dot, residual

    @staticmethod
    def mclachlan_sq(
        ansatz: Ansatz, h_gc: PauliSum, theta_dot: npt.NDArray[np.float64]
    ) -> float:
        """L^2 = 2 (<H^2> - <H>^2 - V . theta_dot), clipped at 0."""
        psi, derivs = AnsatzSimulator.state_and_derivatives(ansatz)
        snap = EquationsOfMotion.snapshot(psi, derivs, h_gc)
        return max(EquationsOfMotion.distance(snap, theta_dot), 0.0)

    @staticmethod
    def distance(snap: EomSnapshot, theta_dot: npt.NDArray[np.float64]) -> float:
        """Unclipped L^2 of a snapshot."""
        return 2.0 * (snap.variance - float(np.dot(snap.gradient, theta_dot)))

    @staticmethod
    def solve(snap: EomSnapshot, tikhonov: Optional[float] = None) -> EomSolution:
        theta_dot, residual = EquationsOfMotion.solve_eom(snap.metric, snap.gradient, tikhonov)
        return EomSolution(
            theta_dot=theta_dot,
            metric=snap.metric,
            gradient=snap.gradient,
            mclachlan_sq=EquationsOfMotion.distance(snap, theta_dot),
            residual=residual,
        )


metric_and_gradient = EquationsOfMotion.metric_and_gradient
solve_eom = EquationsOfMotion.solve_eom
mclachlan_sq = EquationsOfMotion.mclachlan_sq
