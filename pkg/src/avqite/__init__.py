"""Adaptive variational quantum imaginary-time evolution on a statevector."""

from src.avqite.equations_of_motion import (
    EomSnapshot,
    EquationsOfMotion,
    mclachlan_sq,
    metric_and_gradient,
    solve_eom,
)
from src.avqite.evolver import AvqiteEvolver, evolve
from src.avqite.generator_selector import GeneratorSelector, grow
from src.avqite.resources import cnot_count, cnot_count_of
from src.avqite.simulator import AnsatzSimulator, ansatz_state

__all__ = [
    "AnsatzSimulator",
    "AvqiteEvolver",
    "EomSnapshot",
    "EquationsOfMotion",
    "GeneratorSelector",
    "ansatz_state",
    "cnot_count",
    "cnot_count_of",
    "evolve",
    "grow",
    "mclachlan_sq",
    "metric_and_gradient",
    "solve_eom",
]
