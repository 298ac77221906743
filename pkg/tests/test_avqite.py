"""
Tests for the adaptive variational imaginary-time evolution.
"""

import pickle

import numpy as np
import pytest
from scipy import linalg

from src.avqite import (
    AnsatzSimulator,
    AvqiteEvolver,
    EquationsOfMotion,
    GeneratorSelector,
    ansatz_state,
    cnot_count,
    evolve,
    grow,
    mclachlan_sq,
    metric_and_gradient,
    solve_eom,
)
from src.core.configs.avqite import AvqiteConfig
from src.core.entities.ansatz import Ansatz
from src.core.errors import GrowthStalledError
from src.core.states.model import ModelParams
from src.core.types.enums.basis import Basis
from src.core.types.enums.tie_break import TieBreak
from src.core.types.operator_pool import OperatorPool
from src.core.types.pauli_string import PauliString
from src.core.types.product_state import ClassicalProductState
from src.model.hamiltonian import HamiltonianBuilder
from src.model.pool import PoolBuilder
from src.pauli.action import PauliAction
from src.pauli.pauli_sum import PauliSum
from src.services.trace_log import TraceLog
from src.statevector import cps_to_state, exact_ite, fidelity


def make_ansatz(bits: str = "000", labels: tuple[str, ...] = (), thetas=None) -> Ansatz:
    reference = ClassicalProductState.from_bitstring(bits)
    generators = [PauliString.from_label(len(bits), label) for label in labels]
    return Ansatz(reference, generators, np.zeros(len(labels)) if thetas is None else thetas)


def make_random_ansatz(seed: int = 4, n_gates: int = 5) -> Ansatz:
    rng = np.random.default_rng(seed)
    pool = PoolBuilder.build_pool(Basis.X, 3)
    picks = rng.choice(len(pool), size=n_gates, replace=False)
    reference = ClassicalProductState.from_bitstring("0110", Basis.Z)
    return Ansatz(
        reference,
        [pool.generators[k] for k in picks],
        rng.uniform(-np.pi, np.pi, size=n_gates),
    )


def make_generator(L: int = 3, h: float = 0.3, mu: float = -0.2) -> PauliSum:
    return HamiltonianBuilder.build_grand_canonical(ModelParams(L, h, mu))


def x_field(n_sites: int, sites: tuple[int, ...]) -> PauliSum:
    total = PauliSum.zero(n_sites)
    for site in sites:
        total = total + PauliSum.from_label(n_sites, f"X{site}")
    return total


# ---------------------------------------------------------------------- #
# Circuit simulation
# ---------------------------------------------------------------------- #
class TestAnsatzSimulator:
    """Ansatz states and their parameter derivatives."""

    def test_empty_ansatz_is_reference(self):
        np.testing.assert_allclose(ansatz_state(make_ansatz("000")), cps_to_state(make_ansatz().reference))

    def test_half_turn_flips_site(self):
        psi = ansatz_state(make_ansatz("000", ("Y0",), np.array([np.pi])))
        flipped = PauliAction.apply_string(PauliString.from_label(3, "X0"), cps_to_state(make_ansatz().reference))
        assert fidelity(psi, flipped) == pytest.approx(1.0)

    def test_matches_dense_unitary_chain(self):
        ansatz = make_random_ansatz()
        psi = cps_to_state(ansatz.reference)
        for g, theta in zip(ansatz.generators, ansatz.thetas):
            dense = PauliSum.from_string(g).to_dense()
            psi = linalg.expm(-0.5j * theta * dense) @ psi
        np.testing.assert_allclose(ansatz_state(ansatz), psi, atol=1e-12)

    def test_derivatives_match_finite_differences(self):
        ansatz = make_random_ansatz(seed=8)
        _, derivs = AnsatzSimulator.state_and_derivatives(ansatz)
        step = 1e-5
        for j in range(ansatz.n_theta):
            shift = np.zeros(ansatz.n_theta)
            shift[j] = step
            forward = ansatz_state(ansatz.with_thetas(ansatz.thetas + shift))
            backward = ansatz_state(ansatz.with_thetas(ansatz.thetas - shift))
            np.testing.assert_allclose(derivs[j], (forward - backward) / (2 * step), atol=1e-8)

    def test_ansatz_validation(self):
        with pytest.raises(ValueError):
            make_ansatz("000", ("Y0",), np.zeros(2))
        with pytest.raises(ValueError):
            make_ansatz("000").append(PauliString.from_label(2, "Y0"))


# ---------------------------------------------------------------------- #
# Equations of motion
# ---------------------------------------------------------------------- #
def test_empty_ansatz_metric():
    g, v = metric_and_gradient(make_ansatz(), x_field(3, (0,)))
    assert g.shape == (0, 0)
    assert v.shape == (0,)


def test_single_rotation_metric_and_gradient():
    g, v = metric_and_gradient(make_ansatz("000", ("Y0",)), x_field(3, (0,)))
    assert g[0, 0] == pytest.approx(0.25)
    assert v[0] == pytest.approx(-0.5)


def test_gradient_is_half_energy_slope():
    ansatz = make_random_ansatz(seed=2)
    h_gc = make_generator()
    _, v = metric_and_gradient(ansatz, h_gc)
    step = 1e-5
    for j in range(ansatz.n_theta):
        shift = np.zeros(ansatz.n_theta)
        shift[j] = step
        up = PauliAction.expectation(h_gc, ansatz_state(ansatz.with_thetas(ansatz.thetas + shift)))
        down = PauliAction.expectation(h_gc, ansatz_state(ansatz.with_thetas(ansatz.thetas - shift)))
        assert v[j] == pytest.approx(-0.5 * (up - down) / (2 * step), abs=1e-6)


def test_metric_matches_fubini_study_form():
    ansatz = make_random_ansatz(seed=6)
    psi, derivs = AnsatzSimulator.state_and_derivatives(ansatz)
    g, _ = metric_and_gradient(ansatz, make_generator())
    overlaps = derivs @ psi.conj()
    expected = (derivs.conj() @ derivs.T - np.outer(overlaps.conj(), overlaps)).real
    np.testing.assert_allclose(g, expected, atol=1e-12)
    np.testing.assert_allclose(g, g.T)
    assert np.min(np.linalg.eigvalsh(g)) > -1e-12


def test_solve_eom_cases():
    v = np.array([0.3, -1.2, 0.5])
    theta_dot, _ = solve_eom(np.eye(3), v)
    np.testing.assert_allclose(theta_dot, v / (1 + 1e-6))

    theta_dot, residual = solve_eom(np.array([[0.25]]), np.array([-0.5]))
    assert theta_dot[0] == pytest.approx(-2.0, rel=1e-5)
    assert residual == pytest.approx(0.0, abs=1e-5)

    singular = np.full((2, 2), 0.25)
    theta_dot, _ = solve_eom(singular, np.array([-0.5, -0.5]))
    assert np.all(np.isfinite(theta_dot))

    theta_dot, residual = solve_eom(np.zeros((0, 0)), np.zeros(0))
    assert theta_dot.size == 0
    assert residual == 0.0


def test_mclachlan_distance_cases():
    h_gc = x_field(3, (0,))
    assert mclachlan_sq(make_ansatz(), h_gc, np.zeros(0)) == pytest.approx(2.0)

    ansatz = make_ansatz("000", ("Y0",))
    g, v = metric_and_gradient(ansatz, h_gc)
    theta_dot, _ = solve_eom(g, v, tikhonov=0.0)
    assert mclachlan_sq(ansatz, h_gc, theta_dot) == pytest.approx(0.0, abs=1e-12)
    theta_dot, _ = solve_eom(g, v)
    assert mclachlan_sq(ansatz, h_gc, theta_dot) < 1e-4

    eigenstate = make_ansatz("000")
    z_field = PauliSum.from_label(3, "Z0") + PauliSum.from_label(3, "Z1 Z2")
    assert mclachlan_sq(eigenstate, z_field, np.zeros(0)) == pytest.approx(0.0, abs=1e-14)


# ---------------------------------------------------------------------- #
# Ansatz growth
# ---------------------------------------------------------------------- #
class TestGeneratorSelector:
    """Candidate scoring and adaptive growth."""

    @pytest.fixture
    def z_pool(self):
        return PoolBuilder.build_pool(Basis.Z, 2)

    def test_no_growth_below_threshold(self, z_pool):
        ansatz = make_ansatz("000")
        z_field = PauliSum.from_label(3, "Z0")
        grown, appended = grow(ansatz, z_pool, z_field, 1e-3)
        assert appended == []
        assert grown.n_theta == 0

    def test_two_independent_flows(self, z_pool):
        h_gc = x_field(3, (0, 1))
        grown, appended = grow(make_ansatz("000"), z_pool, h_gc, 1e-3)
        assert [g.label for g in appended] == ["Y0", "Y1"]
        assert grown.labels == ["Y0", "Y1"]
        g, v = metric_and_gradient(grown, h_gc)
        theta_dot, _ = solve_eom(g, v)
        assert mclachlan_sq(grown, h_gc, theta_dot) < 1e-4

    def test_grow_leaves_input_untouched(self, z_pool):
        ansatz = make_ansatz("000")
        grow(ansatz, z_pool, x_field(3, (0,)), 1e-3)
        assert ansatz.n_theta == 0

    def test_alphabetical_tie_break(self, z_pool):
        selector = GeneratorSelector(AvqiteConfig(tie_break=TieBreak.ALPHABETICAL))
        grown, appended = selector.grow(make_ansatz("000"), z_pool, x_field(3, (1,)), 1e-3)
        # Y1, Z0 Y1 and Y1 Z2 act identically on |000>; "Y1" sorts first
        assert [g.label for g in appended] == ["Y1"]

    def test_scores_match_naive_recompute(self):
        ansatz = make_random_ansatz(seed=12, n_gates=4)
        h_gc = make_generator()
        pool = PoolBuilder.build_pool(Basis.Z, 3)
        options = AvqiteConfig(candidate_chunk=7)
        selector = GeneratorSelector(options)
        psi, derivs = AnsatzSimulator.state_and_derivatives(ansatz)
        snap = EquationsOfMotion.snapshot(psi, derivs, h_gc)
        solution = EquationsOfMotion.solve(snap, options.tikhonov)
        scores = selector.score_candidates(snap, solution, pool.generators)

        for k, generator in enumerate(pool.generators):
            trial = ansatz.copy()
            trial.append(generator, 0.0)
            t_psi, t_derivs = AnsatzSimulator.state_and_derivatives(trial)
            t_snap = EquationsOfMotion.snapshot(t_psi, t_derivs, h_gc)
            naive = EquationsOfMotion.solve(t_snap, options.tikhonov).mclachlan_sq
            assert scores[k] == pytest.approx(naive, abs=1e-8)

    def test_empty_pool_stalls(self):
        empty = OperatorPool(Basis.Z, ())
        with pytest.raises(GrowthStalledError) as info:
            grow(make_ansatz("000"), empty, x_field(3, (0,)), 1e-3)
        assert info.value.mclachlan_sq == pytest.approx(2.0)
        restored = pickle.loads(pickle.dumps(info.value))
        assert restored.mclachlan_sq == info.value.mclachlan_sq

    def test_stall_can_be_tolerated(self):
        selector = GeneratorSelector(AvqiteConfig(fail_on_stall=False))
        grown, appended = selector.grow(
            make_ansatz("000"), OperatorPool(Basis.Z, ()), x_field(3, (0,)), 1e-3
        )
        assert appended == []
        assert grown.n_theta == 0

    def test_threshold_must_be_positive(self, z_pool):
        with pytest.raises(ValueError):
            grow(make_ansatz("000"), z_pool, x_field(3, (0,)), 0.0)


# ---------------------------------------------------------------------- #
# Resources and full evolution
# ---------------------------------------------------------------------- #
def test_cnot_count():
    assert cnot_count(make_ansatz("000")) == 0
    assert cnot_count(make_ansatz("000", ("Y1",))) == 0
    assert cnot_count(make_ansatz("000", ("Y1 Z2",))) == 2
    assert cnot_count(make_ansatz("0" * 8, ("Y0 Z3", "Y2 Z5 X7", "Y4"))) == 6


def test_evolve_to_zero_time():
    cps = ClassicalProductState.from_bitstring("0101")
    ansatz, state, report = evolve(cps, make_generator(), 0.0, PoolBuilder.build_pool(Basis.Z, 3))
    assert ansatz.n_theta == 0
    np.testing.assert_allclose(state, cps_to_state(cps))
    assert report.steps == 0
    assert report.log_norm_sq == 0.0


def test_evolve_single_mode_flow():
    params = ModelParams(2)
    h_gc = HamiltonianBuilder.build_grand_canonical(params)
    cps = ClassicalProductState.from_bitstring("001")
    pool = PoolBuilder.build_pool(Basis.Z, 2)
    trace = TraceLog()
    ansatz, state, report = AvqiteEvolver(trace=trace).evolve(
        cps, h_gc, 0.5, pool, {"walk": 0}
    )
    exact = exact_ite(cps, h_gc, 0.5)
    assert 1.0 - fidelity(state, exact.state) < 1e-3
    assert report.n_theta == ansatz.n_theta >= 1
    assert report.appended_labels == ansatz.labels
    assert report.max_mclachlan_sq <= 1e-3
    assert report.log_norm_sq == pytest.approx(exact.log_p, abs=0.05)

    records = trace.latest()
    assert len(records) == report.steps
    assert records[-1]["tau"] == 0.5
    assert all(r["walk"] == 0 and r["dt"] <= 0.1 for r in records)
    assert sum(r["dt"] for r in records) == pytest.approx(0.5)


def test_trace_log_drops_oldest_records():
    trace = TraceLog(capacity=3)
    trace.extend({"step": i} for i in range(5))
    assert len(trace) == 3
    assert trace.dropped == 2
    assert [r["step"] for r in trace.latest()] == [2, 3, 4]

    many = TraceLog(capacity=1000)
    many.extend({"step": i} for i in range(250_000))
    assert many.dropped == 249_000
    assert many.latest()[0]["step"] == 249_000

    trace.clear()
    assert (len(trace), trace.dropped) == (0, 0)
    with pytest.raises(ValueError):
        TraceLog(capacity=0)


def test_evolve_rejects_negative_time():
    with pytest.raises(ValueError):
        evolve(
            ClassicalProductState.from_bitstring("000"),
            make_generator(L=2),
            -0.1,
            PoolBuilder.build_pool(Basis.Z, 2),
        )


@pytest.mark.slow
def test_avqite_tracks_exact_evolution_at_acceptance_size():
    params = ModelParams(12, 0.0, -0.55)
    h_gc = HamiltonianBuilder.build_grand_canonical(params)
    pool = PoolBuilder.build_pool(Basis.Z, 12)
    rng = np.random.default_rng(2024)
    for _ in range(3):
        cps = ClassicalProductState.uniform(Basis.Z, rng.integers(0, 2, size=13))
        _, state, report = evolve(cps, h_gc, 0.5, pool)
        assert 1.0 - fidelity(state, exact_ite(cps, h_gc, 0.5).state) < 1e-2
        assert report.max_mclachlan_sq <= 1e-3
