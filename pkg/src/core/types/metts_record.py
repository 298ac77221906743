from dataclasses import dataclass

from .product_state import ClassicalProductState
from .statevector import Statevector


@dataclass(frozen=True, slots=True)
class MettsRecord:
    """Normalized METTS with the log of its unnormalized weight."""

    state: Statevector
    log_p: float
    source_cps: ClassicalProductState
