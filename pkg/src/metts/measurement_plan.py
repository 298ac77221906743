"""
Measurement plan of a METTS chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from src.pauli.pauli_sum import PauliSum


@dataclass(frozen=True, slots=True)
class MeasurementPlan:
    """
    What a thermal step records from its METTS.

    Attributes:
        operators:        Named Hermitian operators; expectation values are stored.
        site_occupations: Also store ``n_1 .. n_L`` under those names.
        bitstring_shots:  z-basis shots drawn from every METTS (0 disables).
    """

    operators: Mapping[str, PauliSum] = field(default_factory=dict)
    site_occupations: bool = False
    bitstring_shots: int = 0

    def __post_init__(self) -> None:
        if self.bitstring_shots < 0:
            raise ValueError(f"bitstring_shots must be >= 0, got {self.bitstring_shots}")
