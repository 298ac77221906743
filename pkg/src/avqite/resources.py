"""
Circuit resource accounting.
"""

from typing import Iterable

from src.core.entities.ansatz import Ansatz
from src.core.types.pauli_string import PauliString


def cnot_count_of(generators: Iterable[PauliString]) -> int:
    """Upper bound sum_j 2 (W_j - 1) for a CNOT-ladder compilation of each rotation."""
    return sum(2 * max(g.weight - 1, 0) for g in generators)


def cnot_count(ansatz: Ansatz) -> int:
    return cnot_count_of(ansatz.generators)
