"""
Shared plumbing of experiment runners.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from itertools import product
from pathlib import Path
from typing import Iterator, Optional

from src.core.errors import ConfigError, DimensionGuardError
from src.core.main_config import settings
from src.core.states.experiment import ExperimentConfig
from src.core.types.enums.experiment import ExperimentKind
from src.model.calibration import ChemicalPotentialCalibrator
from src.model.grand_canonical_oracle import GrandCanonicalOracle
from src.render.result_renderer import ResultRenderer
from src.render.table_renderer import TableRenderer
from src.services.trace_log import TraceLog

logger = logging.getLogger(__name__)


def tag(value: float) -> str:
    """File-name friendly number: ``-0.55`` -> ``m0.55``."""
    text = f"{value:g}"
    return text.replace("-", "m")


class Experiment(ABC):
    """One experiment kind; ``run`` returns the files it wrote."""

    kind: ExperimentKind

    def __init__(self, config: ExperimentConfig, tables: TableRenderer) -> None:
        self.config = config
        self.tables = tables
        self.results = ResultRenderer(tables)
        self._mu_cache: dict[tuple[int, float], float] = {}

    @abstractmethod
    def run(self) -> list[Path]: ...

    # ------------------------------------------------------------------ #
    # Helpers
    # ------------------------------------------------------------------ #
    def model_grid(self) -> Iterator[tuple[int, float]]:
        return product(self.config.L, self.config.h)

    def resolve_mu(self, L: int, h: float) -> float:
        """Configured mu, or the calibrated plateau midpoint for the target filling."""
        if self.config.mu is not None:
            return self.config.mu
        if self.config.target_filling is None:
            raise ConfigError(f"{self.kind.value} needs model.mu or grid.target_filling")
        key = (L, h)
        if key not in self._mu_cache:
            mu = ChemicalPotentialCalibrator.calibrate_mu(L, h, self.config.target_filling)
            logger.info("Calibrated mu=%.6f for L=%d h=%g filling %g", mu, L, h, self.config.target_filling)
            self._mu_cache[key] = mu
        return self._mu_cache[key]

    def ed_oracle(self, L: int, h: float, with_vectors: bool = False) -> Optional[GrandCanonicalOracle]:
        """Exact reference, or ``None`` (with a warning) above the dimension guard."""
        try:
            return GrandCanonicalOracle(L, h, with_vectors)
        except DimensionGuardError as exc:
            logger.warning("Skipping exact reference for L=%d: %s", L, exc)
            return None

    def write_traces(self, trace: TraceLog, name: Optional[str] = None) -> Optional[Path]:
        if len(trace) == 0:
            return None
        if trace.dropped:
            logger.warning("Trace buffer dropped %d oldest records", trace.dropped)
        return self.tables.write_jsonl(name or settings.output.trace_name, trace.latest())
