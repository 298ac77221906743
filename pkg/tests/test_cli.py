"""
Tests for configuration loading, output files and the command-line entry point.
"""

import csv
import json

import pytest

from src.controllers.command_line import CommandLine
from src.controllers.experiment_controller import (
    EXIT_CONFIG,
    EXIT_NONCONVERGENCE,
    EXIT_OK,
    ExperimentController,
    exit_code_for,
    main,
)
from src.core.entities.sample_set import SampleRecord, SampleSet
from src.core.errors import ChainStepError, ConfigError, DimensionGuardError, NonConvergenceError
from src.core.main_config import settings
from src.core.states.experiment import ExperimentConfig
from src.core.types.enums.experiment import ExperimentKind
from src.model.grand_canonical_oracle import GrandCanonicalOracle
from src.render import ResultRenderer, TableRenderer, load_fixtures
from src.services.run_manifest import RunManifest

ED_REFERENCE_TOML = """
experiment = "ed-reference"
master_seed = 7

[model]
L = [2, 3]
h = [0.1]
mu = -0.2

[grid]
beta = [1.0, 5.0]
"""

CALIBRATE_TOML = """
experiment = "calibrate-mu"

[model]
L = [4]
h = [0.0]

[grid]
beta = [1.0]
target_filling = 0.5
"""


def write_config(tmp_path, text: str, name: str = "experiment.toml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


# ---------------------------------------------------------------------- #
# Configuration
# ---------------------------------------------------------------------- #
class TestExperimentConfig:
    """TOML loading and validation."""

    def test_load_toml(self, tmp_path):
        config = ExperimentConfig.load(write_config(tmp_path, ED_REFERENCE_TOML))
        assert config.kind == ExperimentKind.ED_REFERENCE
        assert config.L == (2, 3)
        assert config.h == (0.1,)
        assert config.mu == -0.2
        assert config.betas == (1.0, 5.0)
        assert config.master_seed == 7
        assert config.avqite.threshold == settings.avqite.threshold

    def test_default_mu_grid(self):
        config = ExperimentConfig.from_mapping({"experiment": "eos"})
        grid = config.mu_grid
        assert len(grid) == 81
        assert grid[0] == -1.0
        assert grid[-1] == 1.0
        assert grid[40] == 0.0

    def test_mapping_round_trip(self):
        config = ExperimentConfig.from_mapping(
            {
                "experiment": "avqmetts",
                "model": {"L": 4, "h": [0.0, 0.1], "mu": -0.3},
                "walks": {"s_w": 5, "s_0": 2, "backend": "avqite", "schedule": "y"},
                "avqite": {"threshold": 1e-4, "tie_break": "alphabetical"},
            }
        )
        assert ExperimentConfig.from_mapping(config.to_mapping()) == config

    @pytest.mark.parametrize(
        "data",
        [
            {},
            {"experiment": "nope"},
            {"experiment": "eos", "colour": "red"},
            {"experiment": "eos", "model": {"L": [4], "J": 1.0}},
            {"experiment": "eos", "model": {"L": ["four"]}},
            {"experiment": "eos", "model": {"L": [1]}},
            {"experiment": "eos", "grid": {"beta": [0.0]}},
            {"experiment": "eos", "walks": {"backend": "tensor"}},
            {"experiment": "eos", "walks": {"schedule": "xyz"}},
            {"experiment": "eos", "avqite": {"tie_break": "random"}},
            {"experiment": "eos", "avqite": {"step_cap": -1.0}},
            {"experiment": "friedel"},
            {"experiment": "calibrate-mu"},
            {"experiment": "ncx-scaling", "model": {"L": [4, 6], "mu": 0.0}},
            {"experiment": "eos", "grid": {"target_filling": 1.5}},
        ],
    )
    def test_invalid_configs(self, data):
        with pytest.raises(ConfigError):
            ExperimentConfig.from_mapping(data)

    def test_unreadable_files(self, tmp_path):
        with pytest.raises(ConfigError):
            ExperimentConfig.load(tmp_path / "missing.toml")
        with pytest.raises(ConfigError):
            ExperimentConfig.load(write_config(tmp_path, "experiment = [", "broken.toml"))

    def test_overrides(self):
        config = ExperimentConfig.from_mapping({"experiment": "eos"})
        changed = config.with_overrides(seed=3, output_dir="elsewhere", workers=4)
        assert (changed.master_seed, changed.output_dir, changed.workers) == (3, "elsewhere", 4)
        assert config.with_overrides() == config


# ---------------------------------------------------------------------- #
# Output files
# ---------------------------------------------------------------------- #
def test_table_renderer_formatting(tmp_path):
    tables = TableRenderer(tmp_path)
    assert tables.format_value(True) == "1"
    assert tables.format_value(1 / 3) == "0.333333333333333"
    assert tables.format_value(float("nan")) == "nan"
    path = tables.write_csv("t.csv", ["a", "b"], [[1, 0.5]])
    assert path.read_text(encoding="utf-8") == "a,b\n1,0.5\n"
    assert tables.written == [path]


def test_sample_set_files(tmp_path):
    samples = SampleSet(
        [SampleRecord(0, 1, False, "y", "0110", {"energy": -0.25, "number": 1.0})],
        {"L": 3, "beta": 2.0},
    )
    csv_path, meta_path = ResultRenderer(TableRenderer(tmp_path)).sample_set("chain", samples)
    with csv_path.open(newline="", encoding="utf-8") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["walk", "step", "kept_flag", "collapse_basis", "cps", "energy", "number"]
    assert rows[1] == ["0", "1", "0", "y", "0110", "-0.25", "1"]
    meta = json.loads(meta_path.read_text(encoding="utf-8"))
    assert meta["observables"] == ["energy", "number"]


# ---------------------------------------------------------------------- #
# Entry point
# ---------------------------------------------------------------------- #
def test_exit_code_policy():
    assert exit_code_for(ConfigError("bad")) == EXIT_CONFIG
    assert exit_code_for(DimensionGuardError("big")) == EXIT_CONFIG
    assert exit_code_for(NonConvergenceError("stuck")) == EXIT_NONCONVERGENCE
    assert exit_code_for(ChainStepError(1, 2, NonConvergenceError("stuck"))) == EXIT_NONCONVERGENCE
    assert exit_code_for(RuntimeError("other")) is None


def test_parser_rejects_unknown_experiment():
    with pytest.raises(SystemExit):
        CommandLine.parse(["nothing"])
    args = CommandLine.parse(["eos", "--seed", "4", "--workers", "2"])
    assert args.experiment == ExperimentKind.EOS
    assert (args.seed, args.workers, args.config) == (4, 2, None)


def test_ed_reference_run(tmp_path):
    config_path = write_config(tmp_path, ED_REFERENCE_TOML)
    out = tmp_path / "out"
    assert main(["ed-reference", "--config", str(config_path), "--out", str(out)]) == EXIT_OK

    fixtures = load_fixtures(out / "ed_reference.csv")
    eps, n = GrandCanonicalOracle(3, 0.1).densities(-0.2, 5.0)
    assert fixtures[(3, 0.1, -0.2, 5.0, "epsilon")] == pytest.approx(eps, abs=1e-13)
    assert fixtures[(3, 0.1, -0.2, 5.0, "n")] == pytest.approx(n, abs=1e-13)
    profile_total = sum(fixtures[(3, 0.1, -0.2, 5.0, f"n_{i}")] for i in range(1, 4))
    assert profile_total == pytest.approx(3 * n, abs=1e-12)
    assert (2, 0.1, -0.2, 1.0, "ground_energy_gc") in fixtures

    manifest = RunManifest.read(out / "manifest.json")
    assert manifest["outputs"] == ["ed_reference.csv"]
    assert "timestamp" not in manifest
    reloaded = ExperimentConfig.load(out / "manifest.json")
    assert reloaded == ExperimentConfig.load(config_path).with_overrides(output_dir=str(out))


def test_rerun_from_manifest_is_identical(tmp_path):
    first = tmp_path / "first"
    main(["ed-reference", "--config", str(write_config(tmp_path, ED_REFERENCE_TOML)), "--out", str(first)])
    second = tmp_path / "second"
    code = main(["ed-reference", "--config", str(first / "manifest.json"), "--out", str(second)])
    assert code == EXIT_OK
    assert (first / "ed_reference.csv").read_bytes() == (second / "ed_reference.csv").read_bytes()


def test_calibrate_mu_run(tmp_path):
    out = tmp_path / "out"
    code = main(["calibrate-mu", "--config", str(write_config(tmp_path, CALIBRATE_TOML)), "--out", str(out)])
    assert code == EXIT_OK
    with (out / "calibrate_mu.csv").open(newline="", encoding="utf-8") as handle:
        rows = list(csv.DictReader(handle))
    assert len(rows) == 1
    assert int(rows[0]["particles"]) == 2
    assert float(rows[0]["mu"]) == pytest.approx(0.0, abs=1e-3)


def test_config_errors_exit_with_code_two(tmp_path):
    config_path = write_config(tmp_path, ED_REFERENCE_TOML)
    assert main(["eos", "--config", str(config_path), "--out", str(tmp_path / "o")]) == EXIT_CONFIG
    # the default ed-reference config has neither mu nor a target filling
    assert main(["ed-reference", "--out", str(tmp_path / "o")]) == EXIT_CONFIG


def test_non_convergence_exits_with_code_three(tmp_path, monkeypatch):
    monkeypatch.setattr(settings.sampling, "calibration_window", (1.5, 2.0))
    out = tmp_path / "out"
    code = main(["calibrate-mu", "--config", str(write_config(tmp_path, CALIBRATE_TOML)), "--out", str(out)])
    assert code == EXIT_NONCONVERGENCE


SMALL_MODEL = {"L": [2], "h": [0.0], "mu": -0.2}
SMALL_WALKS = {"s_w": 2, "s_0": 2, "warmup": 1}


@pytest.mark.parametrize(
    "experiment, extra, expected",
    [
        ("eos", {"grid": {"beta": [0.4], "mu_min": -0.2, "mu_max": 0.2, "mu_step": 0.2}}, ["eos.csv"]),
        (
            "basis-study",
            {"grid": {"beta": [0.4], "schedules": ["yz", "z"]}},
            ["basis_study.csv", "samples_L2_h0_b0.4_yz.csv", "samples_L2_h0_b0.4_z.meta.json"],
        ),
        (
            "friedel",
            {"grid": {"beta": [0.4]}},
            ["friedel.csv", "profile_L2_h0_b0.4.csv", "profile_ed_L2_h0_b0.4.csv"],
        ),
        ("strings", {"grid": {"beta": [0.4]}, "sampling": {"shots_per_metts": 3}}, ["strings.csv", "histogram_L2_h0_b0.4.csv"]),
        (
            "avqite-accuracy",
            {"grid": {"beta": [0.4], "bases": ["z"]}, "sampling": {"n_cps": 2}, "avqite": {"fail_on_stall": False}},
            ["avqite_samples.csv", "avqite_summary.csv", "avqite_trace.jsonl"],
        ),
        (
            "avqmetts",
            {"grid": {"beta": [0.4], "schedules": ["z"]}, "avqite": {"fail_on_stall": False}},
            ["avqmetts.csv", "avqmetts_steps.csv", "avqmetts_L2_h0_b0.4_z.csv"],
        ),
    ],
)
def test_small_experiments_write_their_tables(tmp_path, experiment, extra, expected):
    data = {"experiment": experiment, "output_dir": str(tmp_path), "model": SMALL_MODEL, "walks": SMALL_WALKS, **extra}
    files = ExperimentController(ExperimentConfig.from_mapping(data)).run()
    names = {p.name for p in files}
    assert set(expected) <= names
    assert "manifest.json" in names
    assert all(p.exists() for p in files)


def test_ncx_scaling_fit(tmp_path):
    data = {
        "experiment": "ncx-scaling",
        "output_dir": str(tmp_path),
        "model": {"L": [2, 3, 4], "h": [0.0], "mu": -0.2},
        "grid": {"beta": [0.4], "bases": ["z"]},
        "avqite": {"fail_on_stall": False},
        "sampling": {"n_cps": 2},
    }
    ExperimentController(ExperimentConfig.from_mapping(data)).run()
    with (tmp_path / "ncx_scaling.csv").open(newline="", encoding="utf-8") as handle:
        rows = list(csv.DictReader(handle))
    assert [int(r["L"]) for r in rows] == [2, 3, 4]
    assert all(float(r["n_cx_min"]) >= 0 for r in rows)
    with (tmp_path / "ncx_fit.csv").open(newline="", encoding="utf-8") as handle:
        assert len(list(csv.DictReader(handle))) == 1
