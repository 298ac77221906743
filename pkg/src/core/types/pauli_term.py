from dataclasses import dataclass

from .pauli_string import PauliString


@dataclass(frozen=True, slots=True)
class PauliTerm:
    """Single weighted Pauli string ``coeff * string``."""

    coeff: complex
    string: PauliString
