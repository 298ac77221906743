"""
Per-CPS AVQITE versus exact-ITE comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from src.avqite.evolver import AvqiteEvolver
from src.core.configs.avqite import AvqiteConfig
from src.core.main_config import settings
from src.core.states.model import ModelParams
from src.core.types.enums.basis import Basis
from src.core.types.product_state import ClassicalProductState
from src.model.hamiltonian import HamiltonianBuilder
from src.model.pool import PoolBuilder
from src.pauli.action import PauliAction
from src.services.trace_log import TraceLog, TraceRecord
from src.statevector.imaginary_time import exact_ite
from src.statevector.overlap import fidelity
from src.statevector.product_state import ProductStateFactory
from src.utils.seeding.seed_helper import SeedHelper

# keeps CPS streams apart from the (walk, step) streams of METTS chains
CPS_STREAM = 1_000_003


@dataclass(frozen=True, slots=True)
class CpsJob:
    params: ModelParams
    basis: Basis
    beta: float
    index: int
    master_seed: int
    options: AvqiteConfig
    with_exact: bool = True


@dataclass(frozen=True, slots=True)
class CpsResult:
    basis: str
    beta: float
    index: int
    cps: str
    energy_av: float
    number_av: float
    n_theta: int
    n_cx: int
    max_mclachlan_sq: float
    energy_ite: Optional[float]
    number_ite: Optional[float]
    infidelity: Optional[float]
    number_initial: float
    traces: list[TraceRecord]


def sample_cps(params: ModelParams, basis: Basis, index: int, master_seed: int) -> ClassicalProductState:
    """CPS number ``index`` of a basis; identical for every beta."""
    basis_idx = list(Basis).index(basis)
    rng = SeedHelper.stream(master_seed, CPS_STREAM, basis_idx, index)
    return ProductStateFactory.random_cps(params.n_sites, basis, rng)


def run_cps_job(job: CpsJob) -> CpsResult:
    params = job.params
    generator = HamiltonianBuilder.build_grand_canonical(params)
    hamiltonian = HamiltonianBuilder.build_hamiltonian(params)
    number = HamiltonianBuilder.build_number_operator(params.L)
    pool = PoolBuilder.build_pool(job.basis, params.L)
    cps = sample_cps(params, job.basis, job.index, job.master_seed)
    tau = job.beta / 2

    trace = TraceLog(settings.output.trace_capacity)
    context = {"basis": job.basis.value, "beta": job.beta, "index": job.index, "cps": cps.bitstring}
    _, state, report = AvqiteEvolver(job.options, trace).evolve(cps, generator, tau, pool, context)
    energy_av = PauliAction.expectation(hamiltonian, state)
    number_av = PauliAction.expectation(number, state)
    number_initial = PauliAction.expectation(number, ProductStateFactory.cps_to_state(cps))

    energy_ite = number_ite = infidelity = None
    if job.with_exact:
        record = exact_ite(cps, generator, tau)
        energy_ite = PauliAction.expectation(hamiltonian, record.state)
        number_ite = PauliAction.expectation(number, record.state)
        infidelity = 1.0 - fidelity(state, record.state)

    return CpsResult(
        basis=job.basis.value,
        beta=job.beta,
        index=job.index,
        cps=cps.bitstring,
        energy_av=energy_av,
        number_av=number_av,
        n_theta=report.n_theta,
        n_cx=report.n_cx,
        max_mclachlan_sq=report.max_mclachlan_sq,
        energy_ite=energy_ite,
        number_ite=number_ite,
        infidelity=infidelity,
        number_initial=number_initial,
        traces=trace.latest(),
    )
