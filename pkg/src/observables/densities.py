"""
Energy and particle densities of a pure state or a METTS ensemble.
"""

from __future__ import annotations

from typing import Union

import numpy as np

from src.core.entities.sample_set import SampleSet
from src.core.types.statevector import Statevector
from src.pauli.action import PauliAction
from src.pauli.pauli_sum import PauliSum

StateOrSamples = Union[Statevector, SampleSet]

ENERGY = "energy"
NUMBER = "number"


def _value(source: StateOrSamples, op: PauliSum, name: str) -> float:
    if isinstance(source, SampleSet):
        return float(np.mean(source.values(name)))
    return PauliAction.expectation(op, source)


def energy_density(source: StateOrSamples, hamiltonian: PauliSum, L: int) -> float:
    """<H> / L with the bare Hamiltonian; ensembles use their ``energy`` records."""
    return _value(source, hamiltonian, ENERGY) / L


def particle_density(source: StateOrSamples, number_op: PauliSum, L: int) -> float:
    """<N> / L; ensembles use their ``number`` records."""
    return _value(source, number_op, NUMBER) / L
