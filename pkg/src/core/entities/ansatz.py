"""
Ansatz module
=============

Parameterized product of Pauli rotations over a classical product state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from src.core.types.pauli_string import PauliString
from src.core.types.product_state import ClassicalProductState


@dataclass
class Ansatz:
    """
    |psi(theta)> = prod_j exp(-i theta_j G_j / 2) |reference>.

    Gate 0 acts first. An empty ansatz represents the reference state.
    """

    reference: ClassicalProductState
    generators: list[PauliString] = field(default_factory=list)
    thetas: npt.NDArray[np.float64] = field(default_factory=lambda: np.zeros(0))

    def __post_init__(self) -> None:
        self.thetas = np.asarray(self.thetas, dtype=np.float64).copy()
        if self.thetas.shape != (len(self.generators),):
            raise ValueError(
                f"Need one angle per generator: {len(self.generators)} generators, "
                f"{self.thetas.shape} angles"
            )
        for g in self.generators:
            if g.n_sites != self.reference.n_sites:
                raise ValueError(
                    f"Generator {g.label} on {g.n_sites} sites, reference on {self.reference.n_sites}"
                )

    @property
    def n_theta(self) -> int:
        return len(self.generators)

    @property
    def labels(self) -> list[str]:
        return [g.label for g in self.generators]

    def append(self, generator: PauliString, theta: float = 0.0) -> None:
        """Add a gate at the end of the circuit (identity when ``theta`` is 0)."""
        if generator.n_sites != self.reference.n_sites:
            raise ValueError(f"Generator {generator.label} does not fit the register")
        self.generators.append(generator)
        self.thetas = np.append(self.thetas, theta)

    def with_thetas(self, thetas: npt.NDArray[np.float64]) -> Ansatz:
        return Ansatz(self.reference, list(self.generators), thetas)

    def copy(self) -> Ansatz:
        return self.with_thetas(self.thetas)

    def __len__(self) -> int:
        return self.n_theta
