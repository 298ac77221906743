"""
Projective collapse of a statevector onto a classical product state.
"""

from typing import Sequence

import numpy as np

from src.core.types.enums.basis import Basis
from src.core.types.product_state import ClassicalProductState
from src.core.types.statevector import Statevector
from src.statevector.overlap import check_normalized
from src.statevector.product_state import EIGENBASES


class StateCollapser:
    """
    Sequential single-site measurement, site 0 first.

    At each site the remaining wavefunction is projected onto the two basis
    eigenvectors; the chain of conditional probabilities reproduces the
    Born distribution over full-register outcomes.
    """

    @staticmethod
    def collapse(
        state: Statevector,
        basis: Basis | str | Sequence[Basis],
        rng: np.random.Generator,
    ) -> tuple[ClassicalProductState, float]:
        """
        Sample a product-state outcome.

        Returns:
            The collapsed CPS and the probability of that outcome.

        Raises:
            NormalizationError: if ``state`` is not normalized.
        """
        check_normalized(state)
        n_sites = int(state.shape[0]).bit_length() - 1
        bases = StateCollapser._resolve_bases(basis, n_sites)

        psi = state
        outcomes: list[int] = []
        prob = 1.0
        for site_basis in bases:
            chi = EIGENBASES[site_basis].conj().T @ psi.reshape(2, -1)
            p0 = float(np.vdot(chi[0], chi[0]).real)
            p1 = float(np.vdot(chi[1], chi[1]).real)
            p0 = p0 / (p0 + p1)
            bit = 0 if rng.uniform() < p0 else 1
            p_bit = p0 if bit == 0 else 1.0 - p0
            prob *= p_bit
            outcomes.append(bit)
            psi = chi[bit] / np.sqrt(p_bit) if psi.shape[0] > 2 else chi[bit]
        return ClassicalProductState(bases, tuple(outcomes)), prob

    @staticmethod
    def _resolve_bases(basis: Basis | str | Sequence[Basis], n_sites: int) -> tuple[Basis, ...]:
        if isinstance(basis, (Basis, str)):
            tag = Basis.parse(basis)
            return tuple(tag for _ in range(n_sites))
        bases = tuple(Basis.parse(b) for b in basis)
        if len(bases) != n_sites:
            raise ValueError(f"Need {n_sites} per-site bases, got {len(bases)}")
        return bases
