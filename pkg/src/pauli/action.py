"""
Action of Pauli strings and sums on statevectors.
"""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt

from src.core.errors import DimensionMismatchError, NonHermitianError, NormalizationError
from src.core.main_config import settings
from src.core.types.pauli_string import PauliString
from src.core.types.statevector import Statevector
from src.pauli.algebra import PauliAlgebra

if TYPE_CHECKING:
    from src.pauli.pauli_sum import PauliSum


@lru_cache(maxsize=8)
def basis_indices(dim: int) -> npt.NDArray[np.int64]:
    """Read-only ``arange(dim)`` shared by every string action."""
    idx = np.arange(dim, dtype=np.int64)
    idx.flags.writeable = False
    return idx


def parity_signs(indices: npt.NDArray[np.int64], z_mask: int) -> npt.NDArray[np.float64]:
    """(-1)^{popcount(index & z_mask)} for every index."""
    return 1.0 - 2.0 * (np.bitwise_count(indices & z_mask) & 1)


class PauliAction:
    """Static helpers applying Pauli operators to amplitude vectors."""

    @staticmethod
    def apply_string(p: PauliString, psi: Statevector) -> Statevector:
        """
        Return ``p |psi>``.

        P|b> = i^{y} (-1)^{b.z} |b ^ x>, so the output amplitude at c is read
        from b = c ^ x; every amplitude is touched exactly once.
        """
        dim = psi.shape[0]
        if dim != 1 << p.n_sites:
            raise DimensionMismatchError(
                f"String on {p.n_sites} sites cannot act on a vector of length {dim}"
            )
        idx = basis_indices(dim)
        source = idx ^ p.x_mask if p.x_mask else idx
        out = psi[source]
        if p.z_mask:
            out = out * parity_signs(source, p.z_mask)
        phase = PauliAlgebra.phase_factor(p)
        if phase != 1:
            out = out * phase
        return out.astype(np.complex128, copy=False)

    @staticmethod
    def apply(op: PauliSum, psi: Statevector) -> Statevector:
        """Return ``op |psi>`` (unnormalized)."""
        if psi.shape[0] != 1 << op.n_sites:
            raise DimensionMismatchError(
                f"Operator on {op.n_sites} sites cannot act on a vector of length {psi.shape[0]}"
            )
        out = np.zeros(psi.shape[0], dtype=np.complex128)
        for term in op.terms:
            out += term.coeff * PauliAction.apply_string(term.string, psi)
        return out

    @staticmethod
    def rotate(p: PauliString, theta: float, psi: Statevector) -> Statevector:
        """exp(-i theta/2 P)|psi> = cos(theta/2)|psi> - i sin(theta/2) P|psi>."""
        if theta == 0.0:
            return psi.copy()
        return np.cos(theta / 2) * psi - 1j * np.sin(theta / 2) * PauliAction.apply_string(p, psi)

    @staticmethod
    def expectation(op: PauliSum, psi: Statevector) -> float:
        """
        Return <psi|op|psi> for a Hermitian ``op`` and normalized ``psi``.

        Raises:
            NonHermitianError: if any coefficient is complex.
            NormalizationError: if ``psi`` deviates from unit norm.
        """
        numerics = settings.numerics
        if not op.is_hermitian():
            raise NonHermitianError("Expectation values need a Hermitian operator")
        norm = float(np.vdot(psi, psi).real)
        if abs(norm - 1.0) > numerics.norm_tol:
            raise NormalizationError(f"State norm^2 is {norm:.12g}, expected 1")
        value = complex(np.vdot(psi, PauliAction.apply(op, psi)))
        if abs(value.imag) > numerics.hermitian_tol:
            raise NonHermitianError(
                f"Expectation has imaginary part {value.imag:.3e}; operator is not Hermitian"
            )
        return value.real
