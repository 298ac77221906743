"""Pauli-string algebra and its action on statevectors."""

from src.pauli.action import PauliAction
from src.pauli.algebra import PauliAlgebra
from src.pauli.pauli_sum import PauliSum
from src.pauli.serialization import PauliSumCodec

__all__ = ["PauliAction", "PauliAlgebra", "PauliSum", "PauliSumCodec"]
