"""
METTS Markov chain orchestration.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Optional

from src.core.entities.sample_set import SampleRecord, SampleSet
from src.core.errors import ChainStepError
from src.core.main_config import settings
from src.core.states.model import ModelParams
from src.core.states.walk import WalkConfig
from src.core.types.enums.backend import BackendKind
from src.metts.backends import make_backend
from src.metts.measurement_plan import MeasurementPlan
from src.model.hamiltonian import HamiltonianBuilder
from src.observables.bitstrings import sample_bitstrings
from src.observables.densities import ENERGY, NUMBER
from src.observables.occupations import occupations_of_state, site_key
from src.pauli.action import PauliAction
from src.services.trace_log import TraceLog, TraceRecord
from src.services.worker_pool import WorkerPool
from src.statevector.collapse import StateCollapser
from src.statevector.product_state import ProductStateFactory
from src.utils.seeding.seed_helper import SeedHelper

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class WalkJob:
    params: ModelParams
    beta: float
    config: WalkConfig
    plan: MeasurementPlan
    walk: int


@dataclass(frozen=True, slots=True)
class WalkResult:
    records: list[SampleRecord]
    traces: list[TraceRecord]


def default_plan(params: ModelParams, **kwargs: Any) -> MeasurementPlan:
    """Bare energy and particle number, plus any extra plan options."""
    return MeasurementPlan(
        operators={
            ENERGY: HamiltonianBuilder.build_hamiltonian(params),
            NUMBER: HamiltonianBuilder.build_number_operator(params.L),
        },
        **kwargs,
    )


def run_walk(job: WalkJob) -> WalkResult:
    """
    One independent walk.

    Step ``s`` evolves a CPS in ``schedule.basis_for_step(s)`` and collapses
    the METTS in ``basis_for_step(s + 1)``. Stream ``(seed, walk, 0)`` draws
    the starting CPS; stream ``(seed, walk, s)`` serves step ``s``.
    """
    params, config, plan = job.params, job.config, job.plan
    schedule = config.schedule
    generator = HamiltonianBuilder.build_grand_canonical(params)
    trace = TraceLog(settings.output.trace_capacity) if config.backend == BackendKind.AVQITE else None
    backend = make_backend(config.backend, generator, params.L, config.avqite, trace)
    tau = job.beta / 2
    warmup = config.resolved_warmup

    start_rng = SeedHelper.walk_stream(config.master_seed, job.walk, 0)
    cps = ProductStateFactory.random_cps(params.n_sites, schedule.basis_for_step(1), start_rng)
    records: list[SampleRecord] = []
    for step in range(1, config.total_steps + 1):
        rng = SeedHelper.walk_stream(config.master_seed, job.walk, step)
        try:
            state, extras = backend.propagate(cps, tau, {"walk": job.walk, "step": step, "cps": str(cps)})
            values = {name: PauliAction.expectation(op, state) for name, op in plan.operators.items()}
            if plan.site_occupations:
                for i, value in enumerate(occupations_of_state(state, params.L), start=1):
                    values[site_key(i)] = float(value)
            values.update(extras)
            shots = (
                tuple(sample_bitstrings(state, plan.bitstring_shots, rng))
                if plan.bitstring_shots
                else ()
            )
            next_cps, _ = StateCollapser.collapse(state, schedule.basis_for_step(step + 1), rng)
        except Exception as exc:
            raise ChainStepError(job.walk, step, exc) from exc
        records.append(
            SampleRecord(
                walk=job.walk,
                step=step,
                kept=step > warmup,
                basis=schedule.basis_for_step(step).value,
                cps=cps.bitstring,
                values=values,
                bitstrings=shots,
            )
        )
        cps = next_cps
    logger.debug("Walk %d finished %d steps", job.walk, config.total_steps)
    return WalkResult(records, trace.latest() if trace is not None else [])


class ChainRunner:
    """
    Runs ``s_w`` walks and assembles their records in walk order.

    With ``workers > 1`` walks go to a process pool; every stream is keyed by
    (seed, walk, step), so the result does not depend on the pool size.
    """

    def __init__(
        self,
        params: ModelParams,
        beta: float,
        config: WalkConfig,
        plan: Optional[MeasurementPlan] = None,
    ) -> None:
        if beta <= 0:
            raise ValueError(f"beta must be > 0, got {beta}")
        self.params = params
        self.beta = beta
        self.config = config
        self.plan = plan or default_plan(params)
        self.trace = TraceLog(settings.output.trace_capacity)

    def run(self) -> SampleSet:
        config = self.config
        jobs = [WalkJob(self.params, self.beta, config, self.plan, w) for w in range(config.s_w)]
        results = WorkerPool(config.workers).map(run_walk, jobs)

        records = [r for result in results for r in result.records]
        for result in results:
            self.trace.extend(result.traces)
        logger.info(
            "METTS L=%d h=%g mu=%g beta=%g: %d walks x %d steps (%s, %s)",
            self.params.L, self.params.h, self.params.mu, self.beta,
            config.s_w, config.total_steps, config.schedule.tag, config.backend.value,
        )
        return SampleSet(records, self.metadata())

    def metadata(self) -> dict[str, Any]:
        config = self.config
        return {
            "L": self.params.L,
            "h": self.params.h,
            "mu": self.params.mu,
            "beta": self.beta,
            "s_w": config.s_w,
            "s_0": config.s_0,
            "warmup": config.resolved_warmup,
            "schedule": config.schedule.tag,
            "backend": config.backend.value,
            "master_seed": config.master_seed,
        }


def run_chain(
    params: ModelParams,
    beta: float,
    config: WalkConfig,
    plan: Optional[MeasurementPlan] = None,
) -> SampleSet:
    return ChainRunner(params, beta, config, plan).run()
