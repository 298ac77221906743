"""
Z2 gauge-theory spin Hamiltonian and number operators.
"""

import logging

from src.core.states.model import ModelParams
from src.core.types.pauli_string import PauliString
from src.pauli.pauli_sum import PauliSum

logger = logging.getLogger(__name__)


class HamiltonianBuilder:
    """
    Static builders for the spin form of the gauge theory.

    Register sites are 0..L. Fermion site ``i`` (1..L) sits on the bond
    between spins ``i - 1`` and ``i``; the boundary spins 0 and L only
    enter through Z operators.
    """

    @staticmethod
    def build_hamiltonian(params: ModelParams) -> PauliSum:
        """H = 1/4 sum_{i=1}^{L-1} (X_i - Z_{i-1} X_i Z_{i+1}) + h sum_{i=0}^{L} Z_i."""
        n = params.n_sites
        items: list[tuple[PauliString, float]] = []
        for i in range(1, params.L):
            items.append((PauliString.from_ops(n, {i: "X"}), 0.25))
            items.append((PauliString.from_ops(n, {i - 1: "Z", i: "X", i + 1: "Z"}), -0.25))
        if params.h != 0.0:
            for i in range(n):
                items.append((PauliString.from_ops(n, {i: "Z"}), params.h))
        return PauliSum(n, items)

    @staticmethod
    def build_site_number(L: int, site: int) -> PauliSum:
        """n_i = (I - Z_{i-1} Z_i) / 2 for fermion site ``1 <= i <= L``."""
        if not 1 <= site <= L:
            raise ValueError(f"Fermion site must lie in 1..{L}, got {site}")
        n = L + 1
        return PauliSum(
            n,
            [
                (PauliString.identity(n), 0.5),
                (PauliString.from_ops(n, {site - 1: "Z", site: "Z"}), -0.5),
            ],
        )

    @staticmethod
    def build_number_operator(L: int) -> PauliSum:
        """N = L/2 - 1/2 sum_{i=1}^{L} Z_{i-1} Z_i, the domain-wall count."""
        if L < 2:
            raise ValueError(f"The chain needs L >= 2 fermion sites, got L={L}")
        n = L + 1
        items: list[tuple[PauliString, float]] = [(PauliString.identity(n), L / 2)]
        for i in range(1, L + 1):
            items.append((PauliString.from_ops(n, {i - 1: "Z", i: "Z"}), -0.5))
        return PauliSum(n, items)

    @staticmethod
    def build_grand_canonical(params: ModelParams) -> PauliSum:
        """K = H - mu N."""
        h = HamiltonianBuilder.build_hamiltonian(params)
        if params.mu == 0.0:
            return h
        return h - params.mu * HamiltonianBuilder.build_number_operator(params.L)
