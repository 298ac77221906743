"""
Grand-canonical ED sweeps over the chemical potential.
"""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from src.core.states.model import ModelParams
from src.core.types.occupation_profile import OccupationProfile
from src.model.hamiltonian import HamiltonianBuilder
from src.pauli.pauli_sum import PauliSum
from src.statevector.ed_thermal import ThermalOracle
from src.utils.bits.bit_helper import BitHelper


class GrandCanonicalOracle:
    """
    One diagonalization of H serving every mu.

    N commutes with H and is constant on each invariant block, so the
    spectrum of H - mu N is the spectrum of H shifted by ``-mu n_block``.
    """

    def __init__(self, L: int, h: float, with_vectors: bool = False) -> None:
        self.L = L
        self.h = h
        self.n_sites = L + 1
        self.hamiltonian = HamiltonianBuilder.build_hamiltonian(ModelParams(L, h))
        self.oracle = ThermalOracle.cached(self.hamiltonian, with_vectors)
        self.block_numbers: npt.NDArray[np.float64] = np.array(
            [
                float(BitHelper.domain_walls(block.indices[:1], self.n_sites)[0])
                for block in self.oracle.blocks
            ]
        )

    def offsets(self, mu: float) -> npt.NDArray[np.float64]:
        return -mu * self.block_numbers

    def energy(self, mu: float, beta: float) -> float:
        """<H> (bare Hamiltonian) in the Gibbs state of H - mu N."""
        return self.oracle.energy_average(beta, self.offsets(mu))

    def particle_number(self, mu: float, beta: float) -> float:
        return self.oracle.block_average(self.block_numbers, beta, self.offsets(mu))

    def densities(self, mu: float, beta: float) -> tuple[float, float]:
        """``(epsilon, n)`` = ``(<H>/L, <N>/L)``."""
        return self.energy(mu, beta) / self.L, self.particle_number(mu, beta) / self.L

    def expectation(self, obs: PauliSum, mu: float, beta: float) -> float:
        return self.oracle.thermal_average(obs, beta, self.offsets(mu))

    def site_occupations(self, mu: float, beta: float) -> OccupationProfile:
        idx = np.arange(1 << self.n_sites, dtype=np.int64)
        values = np.array(
            [
                self.oracle.diagonal_average(
                    BitHelper.occupation(idx, self.n_sites, site).astype(np.float64),
                    beta,
                    self.offsets(mu),
                )
                for site in range(1, self.L + 1)
            ]
        )
        return OccupationProfile(values)
