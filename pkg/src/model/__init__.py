from src.model.calibration import ChemicalPotentialCalibrator, MuPlateau
from src.model.free_fermion import FreeFermionReference
from src.model.grand_canonical_oracle import GrandCanonicalOracle
from src.model.hamiltonian import HamiltonianBuilder
from src.model.pool import PoolBuilder

build_hamiltonian = HamiltonianBuilder.build_hamiltonian
build_number_operator = HamiltonianBuilder.build_number_operator
build_grand_canonical = HamiltonianBuilder.build_grand_canonical
build_pool = PoolBuilder.build_pool
free_fermion_reference = FreeFermionReference.free_fermion_reference
calibrate_mu = ChemicalPotentialCalibrator.calibrate_mu

__all__ = [
    "ChemicalPotentialCalibrator",
    "FreeFermionReference",
    "GrandCanonicalOracle",
    "HamiltonianBuilder",
    "MuPlateau",
    "PoolBuilder",
    "build_grand_canonical",
    "build_hamiltonian",
    "build_number_operator",
    "build_pool",
    "calibrate_mu",
    "free_fermion_reference",
]
