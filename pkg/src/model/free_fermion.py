"""
Free-fermion reference for the deconfined (h = 0) chain.
"""

import numpy as np
import numpy.typing as npt
from scipy.special import expit


class FreeFermionReference:
    """
    Grand-canonical densities of open-chain hopping with amplitude 1/2.

    Single-particle energies are ``cos(m pi / (L + 1))``, ``m = 1..L``.
    """

    @staticmethod
    def single_particle_energies(L: int) -> npt.NDArray[np.float64]:
        m = np.arange(1, L + 1)
        return np.cos(m * np.pi / (L + 1))

    @staticmethod
    def occupations(L: int, beta: float, mu: float) -> npt.NDArray[np.float64]:
        if beta <= 0:
            raise ValueError(f"Free-fermion reference needs beta > 0, got {beta}")
        eps = FreeFermionReference.single_particle_energies(L)
        return expit(-beta * (eps - mu))

    @staticmethod
    def free_fermion_reference(L: int, beta: float, mu: float) -> tuple[float, float]:
        """Return ``(epsilon, n)``: energy and particle density per site."""
        eps = FreeFermionReference.single_particle_energies(L)
        f = FreeFermionReference.occupations(L, beta, mu)
        return float(np.dot(eps, f) / L), float(np.sum(f) / L)
