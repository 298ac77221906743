"""
Adaptive variational imaginary-time evolution driver.
"""

from __future__ import annotations

import logging
from typing import Any, Optional

import numpy as np

from src.avqite.equations_of_motion import EquationsOfMotion
from src.avqite.generator_selector import GeneratorSelector
from src.avqite.resources import cnot_count
from src.avqite.simulator import AnsatzSimulator
from src.core.configs.avqite import AvqiteConfig
from src.core.entities.ansatz import Ansatz
from src.core.main_config import settings
from src.core.types.evolution_report import EvolutionReport, GrowthEvent
from src.core.types.operator_pool import OperatorPool
from src.core.types.product_state import ClassicalProductState
from src.core.types.statevector import Statevector
from src.pauli.pauli_sum import PauliSum
from src.services.trace_log import TraceLog

logger = logging.getLogger(__name__)


class AvqiteEvolver:
    """
    Integrates the McLachlan flow from a CPS to ``tau_final``.

    Every step: solve the equations of motion, grow the ansatz while
    L^2 exceeds the threshold, then advance ``theta += theta_dot * dt`` with
    ``dt = step_cap / max|theta_dot|`` clamped to ``[dt_min, dt_max]``.
    """

    def __init__(self, options: Optional[AvqiteConfig] = None, trace: Optional[TraceLog] = None) -> None:
        self.options = options or settings.avqite
        self.selector = GeneratorSelector(self.options)
        self.trace = trace

    def evolve(
        self,
        cps: ClassicalProductState,
        h_gc: PauliSum,
        tau_final: float,
        pool: OperatorPool,
        context: Optional[dict[str, Any]] = None,
    ) -> tuple[Ansatz, Statevector, EvolutionReport]:
        if tau_final < 0:
            raise ValueError(f"Imaginary time must be >= 0, got {tau_final}")
        opts = self.options
        ansatz = Ansatz(cps)
        report = EvolutionReport()
        tau = 0.0

        while tau < tau_final:
            psi, derivs = AnsatzSimulator.state_and_derivatives(ansatz)
            snap = EquationsOfMotion.snapshot(psi, derivs, h_gc)
            solution = EquationsOfMotion.solve(snap, opts.tikhonov)
            snap, solution, appended = self.selector.grow_from(
                ansatz, snap, solution, pool, h_gc, opts.threshold
            )
            l_sq = solution.reported_mclachlan_sq
            for g in appended:
                report.growth_events.append(GrowthEvent(tau, g.label, l_sq))

            rate = float(np.max(np.abs(solution.theta_dot))) if solution.theta_dot.size else 0.0
            dt = opts.dt_max if rate == 0.0 else min(max(opts.step_cap / rate, opts.dt_min), opts.dt_max)
            remaining = tau_final - tau
            if dt >= remaining or remaining - dt < 1e-12:
                dt = remaining
            ansatz.thetas = ansatz.thetas + solution.theta_dot * dt
            report.log_norm_sq -= 2.0 * snap.energy * dt
            tau = tau_final if dt == remaining else tau + dt

            report.steps += 1
            report.final_mclachlan_sq = l_sq
            report.max_mclachlan_sq = max(report.max_mclachlan_sq, l_sq)
            if self.trace is not None:
                self.trace.add(
                    {
                        **(context or {}),
                        "tau": tau,
                        "dt": dt,
                        "mclachlan_sq": l_sq,
                        "n_theta": ansatz.n_theta,
                        "n_cx": cnot_count(ansatz),
                        "appended": [g.label for g in appended],
                    }
                )

        report.n_theta = ansatz.n_theta
        report.n_cx = cnot_count(ansatz)
        state = AnsatzSimulator.ansatz_state(ansatz)
        logger.debug(
            "AVQITE %s to tau=%.4g: %d steps, N_theta=%d, N_CX=%d, max L^2=%.3e",
            cps, tau_final, report.steps, report.n_theta, report.n_cx, report.max_mclachlan_sq,
        )
        return ansatz, state, report


def evolve(
    cps: ClassicalProductState,
    h_gc: PauliSum,
    tau_final: float,
    pool: OperatorPool,
    opts: Optional[AvqiteConfig] = None,
) -> tuple[Ansatz, Statevector, EvolutionReport]:
    return AvqiteEvolver(opts).evolve(cps, h_gc, tau_final, pool)
