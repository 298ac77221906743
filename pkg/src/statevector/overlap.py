"""
Overlaps between statevectors.
"""

import numpy as np

from src.core.errors import DimensionMismatchError, NormalizationError
from src.core.main_config import settings
from src.core.types.product_state import ClassicalProductState
from src.core.types.statevector import Statevector
from src.statevector.product_state import ProductStateFactory


def check_normalized(psi: Statevector, tol: float | None = None) -> None:
    tol = settings.numerics.norm_tol if tol is None else tol
    norm = float(np.vdot(psi, psi).real)
    if abs(norm - 1.0) > tol:
        raise NormalizationError(f"State norm^2 is {norm:.12g}, expected 1")


def fidelity(a: Statevector, b: Statevector) -> float:
    """|<a|b>|^2, clipped into [0, 1]."""
    if a.shape != b.shape:
        raise DimensionMismatchError(f"Fidelity of vectors of shape {a.shape} and {b.shape}")
    check_normalized(a)
    check_normalized(b)
    value = abs(complex(np.vdot(a, b))) ** 2
    return float(min(max(value, 0.0), 1.0))


def born_probability(state: Statevector, cps: ClassicalProductState) -> float:
    """Probability |<cps|state>|^2 of a full-register outcome."""
    reference = ProductStateFactory.cps_to_state(cps)
    if reference.shape != state.shape:
        raise DimensionMismatchError(
            f"CPS on {cps.n_sites} sites against a vector of length {state.shape[0]}"
        )
    return abs(complex(np.vdot(reference, state))) ** 2
