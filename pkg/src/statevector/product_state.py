"""
Classical product state preparation.
"""

from functools import reduce
from typing import Sequence

import numpy as np
import numpy.typing as npt

from src.core.types.enums.basis import Basis
from src.core.types.product_state import ClassicalProductState
from src.core.types.statevector import Statevector

_SQRT_HALF = 1.0 / np.sqrt(2.0)

# columns are the +1 (outcome 0) and -1 (outcome 1) eigenvectors
EIGENBASES: dict[Basis, npt.NDArray[np.complex128]] = {
    Basis.Z: np.array([[1, 0], [0, 1]], dtype=np.complex128),
    Basis.X: _SQRT_HALF * np.array([[1, 1], [1, -1]], dtype=np.complex128),
    Basis.Y: _SQRT_HALF * np.array([[1, 1], [1j, -1j]], dtype=np.complex128),
}


class ProductStateFactory:
    """Static helpers turning CPS labels into amplitude vectors."""

    @staticmethod
    def site_vector(basis: Basis, outcome: int) -> npt.NDArray[np.complex128]:
        return EIGENBASES[basis][:, outcome]

    @staticmethod
    def cps_to_state(cps: ClassicalProductState) -> Statevector:
        """Kronecker product of the site eigenvectors, site 0 leftmost."""
        vectors = [
            ProductStateFactory.site_vector(b, o) for b, o in zip(cps.bases, cps.outcomes)
        ]
        return reduce(np.kron, vectors).astype(np.complex128)

    @staticmethod
    def random_cps(
        n_sites: int, basis: Basis | Sequence[Basis], rng: np.random.Generator
    ) -> ClassicalProductState:
        """Uniformly random outcomes in the given (per-site) basis."""
        bases = (
            tuple(Basis.parse(b) for b in basis)
            if not isinstance(basis, (Basis, str))
            else tuple(Basis.parse(basis) for _ in range(n_sites))
        )
        if len(bases) != n_sites:
            raise ValueError(f"Need {n_sites} bases, got {len(bases)}")
        outcomes = tuple(int(b) for b in rng.integers(0, 2, size=n_sites))
        return ClassicalProductState(bases, outcomes)
