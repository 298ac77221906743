"""
Experiment configuration loaded from TOML files or JSON run manifests.
"""

from __future__ import annotations

import json
import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Mapping, Optional

import numpy as np

from src.core.configs.avqite import AvqiteConfig
from src.core.errors import ConfigError
from src.core.main_config import settings
from src.core.states.model import ModelParams
from src.core.states.walk import WalkConfig
from src.core.types.collapse_schedule import CollapseSchedule
from src.core.types.enums.backend import BackendKind
from src.core.types.enums.basis import Basis
from src.core.types.enums.experiment import ExperimentKind
from src.core.types.enums.tie_break import TieBreak

_TOP_LEVEL = {"experiment", "master_seed", "output_dir", "workers", "model", "grid", "walks", "avqite", "sampling"}
_SECTIONS: dict[str, set[str]] = {
    "model": {"L", "h", "mu"},
    "grid": {"beta", "mu_min", "mu_max", "mu_step", "target_filling", "schedules", "bases"},
    "walks": {"s_w", "s_0", "warmup", "schedule", "backend"},
    "avqite": {f.name for f in fields(AvqiteConfig)},
    "sampling": {"shots_per_metts", "n_cps"},
}


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Fully resolved description of one experiment run.

    ``L`` and ``h`` are grids; most experiments use every combination.
    ``mu = None`` means "calibrate to ``target_filling``" where a chemical
    potential is needed.
    """

    kind: ExperimentKind
    master_seed: int = 0
    output_dir: str = "results"
    workers: int = 1
    L: tuple[int, ...] = (12,)
    h: tuple[float, ...] = (0.0,)
    mu: Optional[float] = None
    betas: tuple[float, ...] = (10.0,)
    mu_min: float = -1.0
    mu_max: float = 1.0
    mu_step: float = 0.025
    target_filling: Optional[float] = None
    schedules: tuple[str, ...] = ("x", "y", "xz", "yz")
    bases: tuple[str, ...] = ("x", "y", "z")
    s_w: int = 100
    s_0: int = 15
    warmup: Optional[int] = None
    schedule: str = "yz"
    backend: BackendKind = BackendKind.EXACT
    avqite: AvqiteConfig = field(default_factory=AvqiteConfig)
    shots_per_metts: int = field(default_factory=lambda: settings.sampling.shots_per_metts)
    n_cps: int = 288

    def __post_init__(self) -> None:
        self._validate()

    # ------------------------------------------------------------------ #
    # Loading
    # ------------------------------------------------------------------ #
    @classmethod
    def load(cls, path: str | Path) -> ExperimentConfig:
        """Read a TOML experiment file or a JSON manifest written by a previous run."""
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"Cannot read config file {path}: {exc}") from exc
        if path.suffix == ".json":
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{path} is not valid JSON: {exc}") from exc
            data = data.get("config", data)
        else:
            try:
                data = tomllib.loads(text)
            except tomllib.TOMLDecodeError as exc:
                raise ConfigError(f"{path} is not valid TOML: {exc}") from exc
        return cls.from_mapping(data)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> ExperimentConfig:
        unknown = set(data) - _TOP_LEVEL
        if unknown:
            raise ConfigError(f"Unknown top-level keys {sorted(unknown)}; allowed: {sorted(_TOP_LEVEL)}")
        if "experiment" not in data:
            raise ConfigError("Missing required key 'experiment'")
        try:
            kind = ExperimentKind(str(data["experiment"]))
        except ValueError:
            allowed = [k.value for k in ExperimentKind]
            raise ConfigError(f"experiment = {data['experiment']!r} is not one of {allowed}") from None

        model = _section(data, "model")
        grid = _section(data, "grid")
        walks = _section(data, "walks")
        sampling = _section(data, "sampling")
        kwargs: dict[str, Any] = {"kind": kind}

        for key in ("master_seed", "workers"):
            if key in data:
                kwargs[key] = _integer(data[key], key)
        if "output_dir" in data:
            kwargs["output_dir"] = str(data["output_dir"])

        if "L" in model:
            kwargs["L"] = tuple(_integer(v, "model.L") for v in _as_list(model["L"]))
        if "h" in model:
            kwargs["h"] = tuple(_number(v, "model.h") for v in _as_list(model["h"]))
        if model.get("mu") is not None:
            kwargs["mu"] = _number(model["mu"], "model.mu")

        if "beta" in grid:
            kwargs["betas"] = tuple(_number(v, "grid.beta") for v in _as_list(grid["beta"]))
        for key in ("mu_min", "mu_max", "mu_step"):
            if key in grid:
                kwargs[key] = _number(grid[key], f"grid.{key}")
        if grid.get("target_filling") is not None:
            kwargs["target_filling"] = _number(grid["target_filling"], "grid.target_filling")
        for key in ("schedules", "bases"):
            if key in grid:
                kwargs[key] = tuple(str(v).lower() for v in _as_list(grid[key]))

        for key in ("s_w", "s_0"):
            if key in walks:
                kwargs[key] = _integer(walks[key], f"walks.{key}")
        if walks.get("warmup") is not None:
            kwargs["warmup"] = _integer(walks["warmup"], "walks.warmup")
        if "schedule" in walks:
            kwargs["schedule"] = str(walks["schedule"]).lower()
        if "backend" in walks:
            try:
                kwargs["backend"] = BackendKind(str(walks["backend"]).lower())
            except ValueError:
                raise ConfigError(f"walks.backend = {walks['backend']!r} must be 'exact' or 'avqite'") from None

        kwargs["avqite"] = _avqite(_section(data, "avqite"))
        for key in ("shots_per_metts", "n_cps"):
            if key in sampling:
                kwargs[key] = _integer(sampling[key], f"sampling.{key}")
        return cls(**kwargs)

    def with_overrides(
        self,
        seed: Optional[int] = None,
        output_dir: Optional[str] = None,
        workers: Optional[int] = None,
    ) -> ExperimentConfig:
        """Apply command-line overrides."""
        changes: dict[str, Any] = {}
        if seed is not None:
            changes["master_seed"] = seed
        if output_dir is not None:
            changes["output_dir"] = output_dir
        if workers is not None:
            changes["workers"] = workers
        return replace(self, **changes)

    def to_mapping(self) -> dict[str, Any]:
        """Inverse of :meth:`from_mapping`; stored in run manifests."""
        avqite = asdict(self.avqite)
        avqite["tie_break"] = self.avqite.tie_break.value
        return {
            "experiment": self.kind.value,
            "master_seed": self.master_seed,
            "output_dir": self.output_dir,
            "workers": self.workers,
            "model": {"L": list(self.L), "h": list(self.h), "mu": self.mu},
            "grid": {
                "beta": list(self.betas),
                "mu_min": self.mu_min,
                "mu_max": self.mu_max,
                "mu_step": self.mu_step,
                "target_filling": self.target_filling,
                "schedules": list(self.schedules),
                "bases": list(self.bases),
            },
            "walks": {
                "s_w": self.s_w,
                "s_0": self.s_0,
                "warmup": self.warmup,
                "schedule": self.schedule,
                "backend": self.backend.value,
            },
            "avqite": avqite,
            "sampling": {"shots_per_metts": self.shots_per_metts, "n_cps": self.n_cps},
        }

    # ------------------------------------------------------------------ #
    # Derived objects
    # ------------------------------------------------------------------ #
    @property
    def mu_grid(self) -> tuple[float, ...]:
        """Inclusive ``mu_min .. mu_max`` grid with step ``mu_step``."""
        count = int(round((self.mu_max - self.mu_min) / self.mu_step)) + 1
        return tuple(float(np.round(self.mu_min + k * self.mu_step, 12)) for k in range(count))

    def model_params(self, L: int, h: float, mu: float) -> ModelParams:
        return ModelParams(L, h, mu)

    def walk_config(
        self,
        schedule: Optional[str] = None,
        backend: Optional[BackendKind] = None,
        s_w: Optional[int] = None,
    ) -> WalkConfig:
        return WalkConfig(
            s_w=self.s_w if s_w is None else s_w,
            s_0=self.s_0,
            schedule=CollapseSchedule.parse(schedule or self.schedule),
            master_seed=self.master_seed,
            warmup=self.warmup,
            backend=backend or self.backend,
            avqite=self.avqite,
            workers=self.workers,
        )

    # ------------------------------------------------------------------ #
    # Validation
    # ------------------------------------------------------------------ #
    def _validate(self) -> None:
        if not self.L or not self.h or not self.betas:
            raise ConfigError("model.L, model.h and grid.beta must be non-empty")
        if any(L < 2 for L in self.L):
            raise ConfigError(f"model.L entries must be >= 2, got {list(self.L)}")
        if any(b <= 0 for b in self.betas):
            raise ConfigError(f"grid.beta entries must be > 0, got {list(self.betas)}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.s_w < 1 or self.s_0 < 1:
            raise ConfigError(f"walks.s_w and walks.s_0 must be >= 1, got {self.s_w}, {self.s_0}")
        if self.warmup is not None and self.warmup < 0:
            raise ConfigError(f"walks.warmup must be >= 0, got {self.warmup}")
        if self.mu_step <= 0 or self.mu_max < self.mu_min:
            raise ConfigError(
                f"grid.mu_step must be > 0 and mu_max >= mu_min, got "
                f"[{self.mu_min}, {self.mu_max}] step {self.mu_step}"
            )
        if self.target_filling is not None and not 0 < self.target_filling < 1:
            raise ConfigError(f"grid.target_filling must lie in (0, 1), got {self.target_filling}")
        if self.shots_per_metts < 1 or self.n_cps < 1:
            raise ConfigError("sampling.shots_per_metts and sampling.n_cps must be >= 1")
        for tag in (self.schedule, *self.schedules):
            try:
                CollapseSchedule.parse(tag)
            except ValueError as exc:
                raise ConfigError(f"Invalid collapse schedule {tag!r}: {exc}") from None
        if not self.schedules:
            raise ConfigError("grid.schedules must be non-empty")
        for tag in self.bases:
            try:
                Basis.parse(tag)
            except ValueError as exc:
                raise ConfigError(f"Invalid basis in grid.bases: {exc}") from None
        if not self.bases:
            raise ConfigError("grid.bases must be non-empty")
        if self.kind == ExperimentKind.NCX_SCALING and len(self.L) < 3:
            raise ConfigError(f"ncx-scaling fits a power law and needs >= 3 values of model.L, got {list(self.L)}")
        if self.kind == ExperimentKind.CALIBRATE_MU and self.target_filling is None:
            raise ConfigError("calibrate-mu needs grid.target_filling")
        needs_mu = self.kind not in (ExperimentKind.EOS, ExperimentKind.CALIBRATE_MU)
        if needs_mu and self.mu is None and self.target_filling is None:
            raise ConfigError(f"{self.kind.value} needs model.mu or grid.target_filling")
        a = self.avqite
        if a.step_cap <= 0 or a.threshold <= 0 or a.tikhonov < 0 or not 0 < a.dt_min <= a.dt_max:
            raise ConfigError(
                "avqite needs step_cap > 0, threshold > 0, tikhonov >= 0 and 0 < dt_min <= dt_max"
            )


def _section(data: Mapping[str, Any], name: str) -> Mapping[str, Any]:
    section = data.get(name, {})
    if not isinstance(section, Mapping):
        raise ConfigError(f"[{name}] must be a table")
    unknown = set(section) - _SECTIONS[name]
    if unknown:
        raise ConfigError(f"Unknown keys {sorted(unknown)} in [{name}]; allowed: {sorted(_SECTIONS[name])}")
    return section


def _as_list(value: Any) -> list[Any]:
    return list(value) if isinstance(value, (list, tuple)) else [value]


def _integer(value: Any, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{key} must be an integer, got {value!r}")
    return value


def _number(value: Any, key: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key} must be a number, got {value!r}")
    return float(value)


def _avqite(section: Mapping[str, Any]) -> AvqiteConfig:
    options = AvqiteConfig()
    for key, value in section.items():
        if key == "tie_break":
            try:
                options.tie_break = TieBreak(str(value))
            except ValueError:
                allowed = [t.value for t in TieBreak]
                raise ConfigError(f"avqite.tie_break = {value!r} is not one of {allowed}") from None
        elif key in ("candidate_chunk",):
            setattr(options, key, _integer(value, f"avqite.{key}"))
        elif key == "fail_on_stall":
            if not isinstance(value, bool):
                raise ConfigError(f"avqite.fail_on_stall must be a boolean, got {value!r}")
            options.fail_on_stall = value
        else:
            setattr(options, key, _number(value, f"avqite.{key}"))
    return options
