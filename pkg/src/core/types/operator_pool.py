"""
Operator pool type.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enums.basis import Basis
from .pauli_string import PauliString


@dataclass(frozen=True, slots=True)
class OperatorPool:
    """Ordered, duplicate-free set of Hermitian generators for ansatz growth."""

    basis_tag: Basis
    generators: tuple[PauliString, ...]

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"Pool {self.basis_tag.value} contains duplicate generators")
        sizes = {g.n_sites for g in self.generators}
        if len(sizes) > 1:
            raise ValueError(f"Pool mixes register sizes {sorted(sizes)}")

    @property
    def n_sites(self) -> int:
        return self.generators[0].n_sites if self.generators else 0

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(g.label for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)
