"""
Tests for METTS chains, estimators and error metrics.
"""

import itertools
import math

import numpy as np
import pytest

from src.core.configs.avqite import AvqiteConfig
from src.core.entities.sample_set import SampleRecord, SampleSet
from src.core.errors import ChainStepError, InsufficientSamplesError, NonConvergenceError, UndefinedMetricError
from src.core.states.model import ModelParams
from src.core.states.walk import WalkConfig
from src.core.types.collapse_schedule import CollapseSchedule
from src.core.types.enums.backend import BackendKind
from src.core.types.enums.basis import Basis
from src.core.types.product_state import ClassicalProductState
from src.metts import (
    ChainRunner,
    ErrorMetrics,
    WalkJob,
    default_plan,
    estimate,
    run_chain,
    run_walk,
    running_estimates,
    step_means,
)
from src.metts.backends import make_backend
from src.model.grand_canonical_oracle import GrandCanonicalOracle
from src.model.hamiltonian import HamiltonianBuilder
from src.observables.densities import ENERGY, NUMBER
from src.pauli.pauli_sum import PauliSum
from src.statevector import StateCollapser, ed_thermal


def make_config(
    s_w: int = 2,
    s_0: int = 3,
    schedule: str = "yz",
    warmup: int = 1,
    seed: int = 11,
    **kwargs,
) -> WalkConfig:
    return WalkConfig(
        s_w=s_w,
        s_0=s_0,
        schedule=CollapseSchedule.parse(schedule),
        master_seed=seed,
        warmup=warmup,
        **kwargs,
    )


def make_samples(grid: list[list[float]], warmup: int = 0, name: str = "x") -> SampleSet:
    records = [
        SampleRecord(
            walk=w,
            step=s + 1,
            kept=s >= warmup,
            basis="z",
            cps="000",
            values={name: value},
        )
        for w, row in enumerate(grid)
        for s, value in enumerate(row)
    ]
    return SampleSet(records)


# ---------------------------------------------------------------------- #
# Schedules and sample sets
# ---------------------------------------------------------------------- #
def test_schedule_parsing():
    schedule = CollapseSchedule.parse("yz")
    assert [schedule.basis_for_step(s).value for s in (1, 2, 3, 4)] == ["y", "z", "y", "z"]
    assert CollapseSchedule.parse("x").is_fixed
    assert schedule.tag == "yz"
    with pytest.raises(ValueError):
        CollapseSchedule.parse("xyz")
    with pytest.raises(ValueError):
        schedule.basis_for_step(0)


def test_sample_set_requires_equal_walks():
    with pytest.raises(ValueError):
        SampleSet(
            [
                SampleRecord(0, 1, True, "z", "00", {"x": 1.0}),
                SampleRecord(0, 2, True, "z", "00", {"x": 1.0}),
                SampleRecord(1, 1, True, "z", "00", {"x": 1.0}),
            ]
        )


def test_sample_set_views():
    samples = make_samples([[9.0, 1.0, 2.0], [9.0, 3.0, 4.0]], warmup=1)
    assert samples.n_walks == 2
    np.testing.assert_allclose(samples.values("x"), [1.0, 2.0, 3.0, 4.0])
    np.testing.assert_allclose(samples.per_walk("x"), [[1.0, 2.0], [3.0, 4.0]])
    assert len(samples.values("x", kept_only=False)) == 6
    with pytest.raises(KeyError):
        samples.values("missing")
    merged = samples.merged(samples)
    assert merged.walks == [0, 1, 2, 3]


# ---------------------------------------------------------------------- #
# Estimators and metrics
# ---------------------------------------------------------------------- #
def test_estimate_cases():
    mean, err = estimate(make_samples([[1.0, 1.0, 1.0]]), "x")
    assert mean == pytest.approx(1.0)
    assert err == pytest.approx(0.0)

    mean, err = estimate(make_samples([[0.0, 2.0], [4.0, 6.0]]), "x")
    assert mean == pytest.approx(3.0)
    assert err == pytest.approx(np.std([0, 2, 4, 6], ddof=1) / 2)

    mean, err = estimate(make_samples([[0.0, 2.0], [4.0, 6.0]]), "x", blocked=True)
    assert mean == pytest.approx(3.0)
    assert err == pytest.approx(np.std([1.0, 5.0], ddof=1) / np.sqrt(2))

    with pytest.raises(InsufficientSamplesError):
        estimate(make_samples([[5.0, 1.0]], warmup=1), "x")


def test_running_estimates():
    rows = running_estimates(make_samples([[1.0, 3.0], [2.0, 6.0]]), "x")
    assert [k for k, _, _ in rows] == [1, 2]
    assert rows[0][1] == pytest.approx(1.5)
    assert rows[1][1] == pytest.approx(3.0)
    single = running_estimates(make_samples([[4.0, 2.0]]), "x")
    assert math.isnan(single[0][2])


def test_step_means_include_warmup():
    means = step_means(make_samples([[10.0, 1.0], [20.0, 3.0]], warmup=1), "x")
    assert means == [(1, 15.0), (2, 2.0)]


def test_error_metrics():
    assert ErrorMetrics.relative_error(1.1, 1.0) == pytest.approx(0.1)
    assert ErrorMetrics.relative_error(-0.9, -1.0) == pytest.approx(0.1)
    assert ErrorMetrics.spread_metric([0.9, 1.1, 1.2], 1.0) == pytest.approx(0.4 / 3)
    assert ErrorMetrics.avqite_deviation(0.51, 0.50, -2.0) == pytest.approx(0.005)
    assert ErrorMetrics.max_site_relative_error([0.3, 0.5], [0.25, 0.5]) == pytest.approx(0.2)
    with pytest.raises(UndefinedMetricError):
        ErrorMetrics.relative_error(0.1, 0.0)
    with pytest.raises(UndefinedMetricError):
        ErrorMetrics.max_site_relative_error([0.1, 0.2], [0.0, 0.2])
    with pytest.raises(ValueError):
        ErrorMetrics.spread_metric([], 1.0)


# ---------------------------------------------------------------------- #
# Chains
# ---------------------------------------------------------------------- #
class TestChainRunner:
    """Exact-backend chains on small registers."""

    @pytest.fixture
    def params(self):
        return ModelParams(L=3, h=0.1, mu=-0.3)

    def test_record_layout(self, params):
        config = make_config(s_w=2, s_0=3, warmup=2)
        samples = run_chain(params, 1.0, config)
        assert len(samples) == 2 * 5
        assert [r.kept for r in samples.records[:5]] == [False, False, True, True, True]
        assert [r.basis for r in samples.records[:4]] == ["y", "z", "y", "z"]
        # the basis that produced each row's CPS
        assert all(r.basis == config.schedule.basis_for_step(r.step).value for r in samples.records)
        assert set(samples.names) == {ENERGY, NUMBER, "log_p"}
        assert len(samples.values(ENERGY)) == 6
        assert samples.metadata["schedule"] == "yz"
        assert samples.metadata["warmup"] == 2

    def test_same_seed_same_samples(self, params):
        first = run_chain(params, 2.0, make_config(seed=5))
        second = run_chain(params, 2.0, make_config(seed=5))
        other = run_chain(params, 2.0, make_config(seed=6))
        assert first.records == second.records
        assert first.records != other.records

    def test_pool_size_does_not_change_results(self, params):
        serial = run_chain(params, 1.0, make_config(s_w=3))
        pooled = run_chain(params, 1.0, make_config(s_w=3, workers=2))
        assert serial.records == pooled.records

    def test_plan_extras(self, params):
        plan = default_plan(params, site_occupations=True, bitstring_shots=4)
        samples = run_chain(params, 1.0, make_config(), plan)
        record = samples.records[0]
        assert {"n_1", "n_2", "n_3"} <= set(record.values)
        assert len(record.bitstrings) == 4
        assert all(len(b) == params.n_sites for b in record.bitstrings)
        total = sum(record.values[f"n_{i}"] for i in range(1, 4))
        assert total == pytest.approx(record.values[NUMBER])

    def test_infinite_temperature_filling(self):
        params = ModelParams(L=4)
        samples = run_chain(params, 1e-6, make_config(s_w=30, s_0=4, schedule="z", warmup=0))
        mean, err = estimate(samples, NUMBER, blocked=True)
        assert abs(mean / params.L - 0.5) < 4 * err / params.L + 1e-9

    def test_thermal_average_matches_ed(self):
        params = ModelParams(L=2, h=0.2, mu=-0.1)
        beta = 1.0
        samples = run_chain(params, beta, make_config(s_w=40, s_0=10, warmup=2, seed=3))
        mean, err = estimate(samples, ENERGY, blocked=True)
        exact = GrandCanonicalOracle(params.L, params.h).energy(params.mu, beta)
        assert abs(mean - exact) < 5 * err + 1e-3

    def test_rejects_non_positive_beta(self, params):
        with pytest.raises(ValueError):
            ChainRunner(params, 0.0, make_config())

    def test_avqite_backend_records_resources(self):
        params = ModelParams(L=2, mu=-0.2)
        config = make_config(
            s_w=1, s_0=2, schedule="z", warmup=0, backend=BackendKind.AVQITE, avqite=AvqiteConfig()
        )
        runner = ChainRunner(params, 0.4, config)
        samples = runner.run()
        assert {"n_theta", "n_cx", "mclachlan_sq", "log_p"} <= set(samples.names)
        assert all(v <= 1e-3 for v in samples.values("mclachlan_sq"))
        assert len(runner.trace) > 0
        assert samples.metadata["backend"] == "avqite"


def test_backend_failure_is_tagged(monkeypatch):
    class FailingBackend:
        def propagate(self, cps, tau, context=None):
            raise NonConvergenceError("no luck")

    monkeypatch.setattr(
        "src.metts.chain_runner.make_backend", lambda *args, **kwargs: FailingBackend()
    )
    job = WalkJob(ModelParams(L=2), 1.0, make_config(), default_plan(ModelParams(L=2)), walk=4)
    with pytest.raises(ChainStepError) as info:
        run_walk(job)
    assert info.value.walk == 4
    assert info.value.step == 1
    assert isinstance(info.value.cause, NonConvergenceError)


# ---------------------------------------------------------------------- #
# Transition matrix of the exact z-basis chain
# ---------------------------------------------------------------------- #
class ScriptedDraws:
    """Uniform draws that force each site's collapse onto a chosen bit."""

    def __init__(self, bits: tuple[int, ...]) -> None:
        self._values = [0.0 if b == 0 else np.nextafter(1.0, 0.0) for b in bits]

    def uniform(self) -> float:
        return self._values.pop(0)


def make_transitions(params: ModelParams, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """METTS weights and the z-collapse transition matrix, through the chain's backend."""
    n = params.n_sites
    states = [ClassicalProductState.uniform(Basis.Z, bits) for bits in itertools.product((0, 1), repeat=n)]
    backend = make_backend(BackendKind.EXACT, HamiltonianBuilder.build_grand_canonical(params), params.L)
    log_p = np.zeros(len(states))
    t = np.zeros((len(states), len(states)))
    for i, cps in enumerate(states):
        state, extras = backend.propagate(cps, beta / 2)
        log_p[i] = extras["log_p"]
        for bits in itertools.product((0, 1), repeat=n):
            outcome, prob = StateCollapser.collapse(state, Basis.Z, ScriptedDraws(bits))
            t[i, int(outcome.bitstring, 2)] = prob
    weights = np.exp(log_p - log_p.max())
    return weights / weights.sum(), t


def basis_projector(n_sites: int, index: int) -> PauliSum:
    """``|index><index|`` as a product of ``(1 +- Z_j) / 2``."""
    projector = PauliSum.identity(n_sites)
    for site, bit in enumerate(format(index, f"0{n_sites}b")):
        sign = 1.0 if bit == "0" else -1.0
        factor = PauliSum.identity(n_sites, 0.5) + PauliSum.from_label(n_sites, f"Z{site}", 0.5 * sign)
        projector = projector @ factor
    return projector


@pytest.mark.parametrize("h, mu, beta", [(0.0, -0.3, 1.0), (0.2, 0.1, 2.5)])
def test_z_chain_satisfies_detailed_balance(h, mu, beta):
    p, t = make_transitions(ModelParams(L=3, h=h, mu=mu), beta)
    np.testing.assert_allclose(t.sum(axis=1), 1.0, atol=1e-12)
    flow = p[:, None] * t
    np.testing.assert_allclose(flow, flow.T, atol=1e-10)


def test_thermal_weights_are_stationary():
    params = ModelParams(L=3, h=0.2, mu=-0.3)
    beta = 1.5
    generator = HamiltonianBuilder.build_grand_canonical(params)
    n = params.n_sites
    thermal = np.array([ed_thermal(basis_projector(n, i), generator, beta) for i in range(2**n)])
    assert thermal.sum() == pytest.approx(1.0, abs=1e-12)

    p, t = make_transitions(params, beta)
    np.testing.assert_allclose(p, thermal, atol=1e-10)
    np.testing.assert_allclose(thermal @ t, thermal, atol=1e-10)
