"""
Statevector simulation of ansatz circuits and their parameter derivatives.
"""

import numpy as np
import numpy.typing as npt

from src.core.entities.ansatz import Ansatz
from src.core.types.pauli_string import PauliString
from src.core.types.statevector import Statevector
from src.pauli.action import PauliAction, basis_indices, parity_signs
from src.pauli.algebra import PauliAlgebra
from src.statevector.product_state import ProductStateFactory


def _apply_string_rows(p: PauliString, block: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
    """``p`` applied to every row of a (k, dim) block."""
    idx = basis_indices(block.shape[1])
    source = idx ^ p.x_mask if p.x_mask else idx
    out = block[:, source]
    if p.z_mask:
        out = out * parity_signs(source, p.z_mask)
    return out * PauliAlgebra.phase_factor(p)


def _rotate_rows(p: PauliString, theta: float, block: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
    if theta == 0.0 or block.shape[0] == 0:
        return block
    return np.cos(theta / 2) * block - 1j * np.sin(theta / 2) * _apply_string_rows(p, block)


class AnsatzSimulator:
    """Exact rotations ``exp(-i theta G / 2) = cos(theta/2) - i sin(theta/2) G``."""

    @staticmethod
    def ansatz_state(ansatz: Ansatz) -> Statevector:
        psi = ProductStateFactory.cps_to_state(ansatz.reference)
        for g, theta in zip(ansatz.generators, ansatz.thetas):
            psi = PauliAction.rotate(g, float(theta), psi)
        return psi

    @staticmethod
    def state_and_derivatives(ansatz: Ansatz) -> tuple[Statevector, npt.NDArray[np.complex128]]:
        """
        Return ``psi`` and the (n_theta, dim) block of ``d psi / d theta_j``.

        The derivative for gate j is ``U_{>j} (-i/2) G_j U_{<=j} |ref>``; each
        is seeded when its gate is reached and carried through later gates.
        """
        psi = ProductStateFactory.cps_to_state(ansatz.reference)
        derivs = np.zeros((ansatz.n_theta, psi.shape[0]), dtype=np.complex128)
        for j, (g, theta) in enumerate(zip(ansatz.generators, ansatz.thetas)):
            theta = float(theta)
            psi = PauliAction.rotate(g, theta, psi)
            derivs[:j] = _rotate_rows(g, theta, derivs[:j])
            derivs[j] = -0.5j * PauliAction.apply_string(g, psi)
        return psi, derivs

    @staticmethod
    def candidate_derivatives(
        generators: list[PauliString] | tuple[PauliString, ...], psi: Statevector
    ) -> npt.NDArray[np.complex128]:
        """Derivatives ``(-i/2) G psi`` of gates appended at the end with angle 0."""
        out = np.empty((len(generators), psi.shape[0]), dtype=np.complex128)
        for k, g in enumerate(generators):
            out[k] = -0.5j * PauliAction.apply_string(g, psi)
        return out


ansatz_state = AnsatzSimulator.ansatz_state
