"""
Tests for the block exact-diagonalization thermal oracle.
"""

import numpy as np
import pytest
from scipy import linalg

from src.core.errors import DimensionGuardError, NonHermitianError
from src.core.main_config import settings
from src.core.states.model import ModelParams
from src.model.hamiltonian import HamiltonianBuilder
from src.pauli.pauli_sum import PauliSum
from src.statevector import ThermalOracle, ed_thermal


def make_generator(L: int = 4, h: float = 0.25, mu: float = 0.1) -> PauliSum:
    return HamiltonianBuilder.build_grand_canonical(ModelParams(L, h, mu))


def dense_average(obs: PauliSum, generator: PauliSum, beta: float) -> float:
    rho = linalg.expm(-beta * generator.to_dense())
    return float(np.trace(rho @ obs.to_dense()).real / np.trace(rho).real)


def test_infinite_temperature_is_trace():
    generator = make_generator()
    identity = PauliSum.identity(generator.n_sites)
    assert ed_thermal(identity, generator, 0.0) == pytest.approx(1.0)
    hamiltonian = HamiltonianBuilder.build_hamiltonian(ModelParams(4, 0.25))
    assert ed_thermal(hamiltonian, generator, 0.0) == pytest.approx(0.0, abs=1e-12)


def test_low_temperature_two_site_energy():
    params = ModelParams(2)
    hamiltonian = HamiltonianBuilder.build_hamiltonian(params)
    assert ed_thermal(hamiltonian, hamiltonian, 200.0) == pytest.approx(-0.5, abs=1e-10)


@pytest.mark.parametrize("beta", [0.3, 1.0, 4.0])
def test_block_averages_match_dense(beta):
    generator = make_generator()
    n = generator.n_sites
    observables = [
        HamiltonianBuilder.build_number_operator(4),
        PauliSum.from_label(n, "X2", 0.5) + PauliSum.from_label(n, "Z1 X2 Z3", -0.5),
        PauliSum.from_label(n, "Z0 Z4"),
    ]
    for obs in observables:
        assert ed_thermal(obs, generator, beta) == pytest.approx(
            dense_average(obs, generator, beta), abs=1e-10
        )


def test_blocks_cover_the_register():
    oracle = ThermalOracle(make_generator())
    covered = np.sort(np.concatenate([b.indices for b in oracle.blocks]))
    np.testing.assert_array_equal(covered, np.arange(oracle.dim))
    assert len(oracle.blocks) > 1
    energies = np.sort(np.concatenate([b.energies for b in oracle.blocks]))
    np.testing.assert_allclose(energies, np.linalg.eigvalsh(make_generator().to_dense()), atol=1e-12)
    assert oracle.ground_energy == pytest.approx(energies[0])


def test_oracle_without_vectors():
    oracle = ThermalOracle(make_generator(), with_vectors=False)
    assert oracle.energy_average(1.0) == pytest.approx(
        dense_average(make_generator(), make_generator(), 1.0)
    )
    with pytest.raises(ValueError):
        oracle.thermal_average(PauliSum.from_label(oracle.n_sites, "X1"), 1.0)


def test_guards(monkeypatch):
    with pytest.raises(NonHermitianError):
        ThermalOracle(PauliSum.from_label(3, "X0", 1j))
    oracle = ThermalOracle(make_generator())
    with pytest.raises(ValueError):
        oracle.probabilities(-1.0)
    monkeypatch.setattr(settings.numerics, "ed_max_dim", 16)
    with pytest.raises(DimensionGuardError):
        ThermalOracle(make_generator())
