"""
Exact-diagonalization thermal oracle.

The generator is split into the connected components of its off-diagonal
graph (fixed boundary spins and fixed fermion number for this model) and
each block is diagonalized densely. The result is the full spectrum, so
averages are exact; only the memory footprint changes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np
import numpy.typing as npt
from scipy import linalg, sparse
from scipy.sparse.csgraph import connected_components

from src.core.errors import DimensionGuardError, NonHermitianError
from src.core.main_config import settings
from src.pauli.pauli_sum import PauliSum

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class EigenBlock:
    """Spectrum of one invariant block; ``indices`` are basis states."""

    indices: npt.NDArray[np.int64]
    energies: npt.NDArray[np.float64]
    vectors: Optional[npt.NDArray[np.complex128]] = None


class ThermalOracle:
    """
    Block-diagonal eigendecomposition of a Hermitian generator.

    ``offsets`` arguments shift the energies of whole blocks; the grand
    canonical sweep uses them to add ``-mu * n`` without re-diagonalizing.
    """

    def __init__(self, generator: PauliSum, with_vectors: bool = True) -> None:
        if generator.dim > settings.numerics.ed_max_dim:
            raise DimensionGuardError(
                f"Dense diagonalization of dimension {generator.dim} exceeds the guard "
                f"{settings.numerics.ed_max_dim}"
            )
        if not generator.is_hermitian():
            raise NonHermitianError("Thermal oracle needs a Hermitian generator")
        self.n_sites = generator.n_sites
        self.dim = generator.dim
        self.with_vectors = with_vectors

        matrix = generator.to_sparse()
        if not np.any(matrix.data.imag):
            matrix = matrix.real
        matrix = matrix.tocsr()
        pattern = (matrix - sparse.diags(matrix.diagonal())).tocsr()
        pattern.eliminate_zeros()
        n_blocks, labels = connected_components(pattern, directed=False)

        order = np.argsort(labels, kind="stable")
        bounds = np.searchsorted(labels[order], np.arange(n_blocks + 1))
        blocks: list[EigenBlock] = []
        for b in range(n_blocks):
            idx = order[bounds[b] : bounds[b + 1]].astype(np.int64)
            sub = matrix[idx][:, idx].toarray()
            if with_vectors:
                energies, vectors = linalg.eigh(sub)
                blocks.append(EigenBlock(idx, energies, vectors))
            else:
                blocks.append(EigenBlock(idx, linalg.eigvalsh(sub)))
        self.blocks: tuple[EigenBlock, ...] = tuple(blocks)
        self.ground_energy = float(min(b.energies[0] for b in self.blocks))
        logger.debug(
            "Diagonalized dimension %d in %d blocks (largest %d)",
            self.dim,
            n_blocks,
            max(b.indices.size for b in self.blocks),
        )

    @classmethod
    def cached(cls, generator: PauliSum, with_vectors: bool = True) -> ThermalOracle:
        """Build-once instance shared by every caller with the same generator."""
        return _cached_oracle(generator, with_vectors)

    # ------------------------------------------------------------------ #
    # Boltzmann weights
    # ------------------------------------------------------------------ #
    def probabilities(
        self, beta: float, offsets: Optional[npt.NDArray[np.float64]] = None
    ) -> list[npt.NDArray[np.float64]]:
        """Normalized Boltzmann weight of every eigenstate, block by block."""
        if beta < 0:
            raise ValueError(f"beta must be >= 0, got {beta}")
        shifted = self.shifted_energies(offsets)
        floor = min(float(e.min()) for e in shifted)
        weights = [np.exp(-beta * (e - floor)) for e in shifted]
        z = float(sum(w.sum() for w in weights))
        return [w / z for w in weights]

    def shifted_energies(
        self, offsets: Optional[npt.NDArray[np.float64]] = None
    ) -> list[npt.NDArray[np.float64]]:
        if offsets is None:
            return [b.energies for b in self.blocks]
        return [b.energies + off for b, off in zip(self.blocks, offsets)]

    # ------------------------------------------------------------------ #
    # Averages
    # ------------------------------------------------------------------ #
    def energy_average(self, beta: float, offsets: Optional[npt.NDArray[np.float64]] = None) -> float:
        """Thermal average of the diagonalized generator itself (offsets excluded)."""
        probs = self.probabilities(beta, offsets)
        return float(sum(np.dot(p, b.energies) for p, b in zip(probs, self.blocks)))

    def block_average(
        self,
        block_values: npt.NDArray[np.float64],
        beta: float,
        offsets: Optional[npt.NDArray[np.float64]] = None,
    ) -> float:
        """Average of a quantity that is constant on every block."""
        probs = self.probabilities(beta, offsets)
        return float(sum(p.sum() * v for p, v in zip(probs, block_values)))

    def diagonal_average(
        self,
        diagonal: npt.NDArray[np.float64],
        beta: float,
        offsets: Optional[npt.NDArray[np.float64]] = None,
    ) -> float:
        """Average of an operator diagonal in the computational basis."""
        self._require_vectors()
        probs = self.probabilities(beta, offsets)
        total = 0.0
        for p, block in zip(probs, self.blocks):
            populations = np.abs(block.vectors) ** 2
            total += float(p @ (diagonal[block.indices] @ populations))
        return total

    def thermal_average(
        self,
        obs: PauliSum,
        beta: float,
        offsets: Optional[npt.NDArray[np.float64]] = None,
    ) -> float:
        """
        Tr(obs rho) with rho the Gibbs state of the (offset) generator.

        Only the block-diagonal part of ``obs`` contributes because rho is
        block diagonal.
        """
        if obs.n_sites != self.n_sites:
            raise ValueError(f"Observable on {obs.n_sites} sites, oracle on {self.n_sites}")
        if not obs.is_hermitian():
            raise NonHermitianError("Thermal averages need a Hermitian observable")
        if all(t.string.x_mask == 0 for t in obs.terms):
            return self.diagonal_average(obs.to_sparse().diagonal().real, beta, offsets)
        self._require_vectors()
        probs = self.probabilities(beta, offsets)
        op = obs.to_sparse().tocsr()
        total = 0.0
        for p, block in zip(probs, self.blocks):
            sub = op[block.indices][:, block.indices].toarray()
            expectations = np.sum(block.vectors.conj() * (sub @ block.vectors), axis=0).real
            total += float(p @ expectations)
        return total

    def _require_vectors(self) -> None:
        if not self.with_vectors:
            raise ValueError("This oracle was built without eigenvectors")


@lru_cache(maxsize=8)
def _cached_oracle(generator: PauliSum, with_vectors: bool) -> ThermalOracle:
    return ThermalOracle(generator, with_vectors)


def ed_thermal(obs: PauliSum, hamiltonian_gc: PauliSum, beta: float) -> float:
    """Exact grand-canonical average ``Tr(obs e^{-beta K}) / Tr(e^{-beta K})``."""
    return ThermalOracle.cached(hamiltonian_gc).thermal_average(obs, beta)
