"""
Classical product state type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .enums.basis import Basis


@dataclass(frozen=True, slots=True)
class ClassicalProductState:
    """
    Tensor product of single-site basis eigenstates.

    ``outcomes[i] == 0`` selects the +1 eigenstate of the basis at site ``i``,
    ``1`` the -1 eigenstate.
    """

    bases: tuple[Basis, ...]
    outcomes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bases) != len(self.outcomes):
            raise ValueError(
                f"CPS needs one outcome per basis: {len(self.bases)} bases, "
                f"{len(self.outcomes)} outcomes"
            )
        if any(bit not in (0, 1) for bit in self.outcomes):
            raise ValueError(f"CPS outcomes must be bits, got {self.outcomes}")

    @classmethod
    def uniform(cls, basis: Basis | str, outcomes: Sequence[int]) -> ClassicalProductState:
        """Product state with the same basis on every site."""
        tag = Basis.parse(basis)
        return cls(tuple(tag for _ in outcomes), tuple(int(b) for b in outcomes))

    @classmethod
    def from_bitstring(cls, bits: str, basis: Basis | str = Basis.Z) -> ClassicalProductState:
        return cls.uniform(basis, [int(c) for c in bits])

    @property
    def n_sites(self) -> int:
        return len(self.bases)

    @property
    def bitstring(self) -> str:
        return "".join(str(b) for b in self.outcomes)

    @property
    def basis_label(self) -> str:
        """Single tag when uniform, otherwise the per-site tags."""
        tags = {b.value for b in self.bases}
        if len(tags) == 1:
            return tags.pop()
        return "".join(b.value for b in self.bases)

    def __str__(self) -> str:
        return f"{self.basis_label}:{self.bitstring}"
