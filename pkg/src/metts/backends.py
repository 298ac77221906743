"""
Imaginary-time backends turning a CPS into a METTS.
"""

from __future__ import annotations

from typing import Optional, Protocol

from src.avqite.evolver import AvqiteEvolver
from src.core.configs.avqite import AvqiteConfig
from src.core.types.enums.backend import BackendKind
from src.core.types.enums.basis import Basis
from src.core.types.operator_pool import OperatorPool
from src.core.types.product_state import ClassicalProductState
from src.core.types.statevector import Statevector
from src.model.pool import PoolBuilder
from src.pauli.pauli_sum import PauliSum
from src.services.trace_log import TraceLog
from src.statevector.imaginary_time import exact_ite


class ThermalBackend(Protocol):
    def propagate(
        self, cps: ClassicalProductState, tau: float, context: Optional[dict] = None
    ) -> tuple[Statevector, dict[str, float]]:
        """Normalized METTS plus backend diagnostics stored with the sample."""
        ...


class ExactBackend:
    """Krylov propagation; records ``log_p``."""

    def __init__(self, generator: PauliSum) -> None:
        self.generator = generator

    def propagate(
        self, cps: ClassicalProductState, tau: float, context: Optional[dict] = None
    ) -> tuple[Statevector, dict[str, float]]:
        record = exact_ite(cps, self.generator, tau)
        return record.state, {"log_p": record.log_p}


class AvqiteBackend:
    """
    Variational propagation with the pool matched to the CPS basis.

    Mixed-basis product states use the z pool.
    """

    def __init__(
        self,
        generator: PauliSum,
        L: int,
        options: Optional[AvqiteConfig] = None,
        trace: Optional[TraceLog] = None,
    ) -> None:
        self.generator = generator
        self.L = L
        self.evolver = AvqiteEvolver(options, trace)
        self._pools: dict[Basis, OperatorPool] = {}

    def pool_for(self, cps: ClassicalProductState) -> OperatorPool:
        bases = set(cps.bases)
        basis = bases.pop() if len(bases) == 1 else Basis.Z
        if basis not in self._pools:
            self._pools[basis] = PoolBuilder.build_pool(basis, self.L)
        return self._pools[basis]

    def propagate(
        self, cps: ClassicalProductState, tau: float, context: Optional[dict] = None
    ) -> tuple[Statevector, dict[str, float]]:
        _, state, report = self.evolver.evolve(cps, self.generator, tau, self.pool_for(cps), context)
        return state, {
            "log_p": report.log_norm_sq,
            "n_theta": float(report.n_theta),
            "n_cx": float(report.n_cx),
            "mclachlan_sq": report.max_mclachlan_sq,
        }


def make_backend(
    kind: BackendKind,
    generator: PauliSum,
    L: int,
    options: Optional[AvqiteConfig] = None,
    trace: Optional[TraceLog] = None,
) -> ThermalBackend:
    if kind == BackendKind.AVQITE:
        return AvqiteBackend(generator, L, options, trace)
    return ExactBackend(generator)
