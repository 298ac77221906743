"""
Exact imaginary-time evolution of classical product states.
"""

from __future__ import annotations

import threading

from src.core.types.metts_record import MettsRecord
from src.core.types.product_state import ClassicalProductState
from src.pauli.pauli_sum import PauliSum
from src.statevector.krylov import KrylovPropagator
from src.statevector.product_state import ProductStateFactory

_PROPAGATORS: dict[PauliSum, KrylovPropagator] = {}
_LOCK = threading.Lock()


def propagator_for(generator: PauliSum) -> KrylovPropagator:
    """Build-once cache of compiled propagators, keyed by generator."""
    with _LOCK:
        propagator = _PROPAGATORS.get(generator)
        if propagator is None:
            propagator = KrylovPropagator(generator)
            _PROPAGATORS[generator] = propagator
        return propagator


def exact_ite(cps: ClassicalProductState, generator: PauliSum, tau: float) -> MettsRecord:
    """
    METTS ``exp(-tau K)|cps>`` normalized, with log P = log ||exp(-tau K)|cps>||^2.

    With ``K = H - mu N`` and ``tau = beta / 2`` this is the METTS of ``cps``
    at inverse temperature ``beta``.
    """
    if tau < 0:
        raise ValueError(f"Imaginary time must be >= 0, got {tau}")
    psi0 = ProductStateFactory.cps_to_state(cps)
    if tau == 0:
        return MettsRecord(state=psi0, log_p=0.0, source_cps=cps)
    state, log_p = propagator_for(generator).propagate(psi0, tau)
    return MettsRecord(state=state, log_p=log_p, source_cps=cps)
