"""
Run manifest service.
"""

from __future__ import annotations

import json
import platform
from pathlib import Path
from typing import Any

import numpy as np
import scipy

from src import __version__
from src.core.main_config import settings
from src.core.states.experiment import ExperimentConfig
from src.render.table_renderer import TableRenderer


class RunManifest:
    """
    Captures the resolved configuration and code version of a run.

    No timestamp is stored, so identical runs write identical manifests;
    the ``config`` block loads back through ``ExperimentConfig.load``.
    """

    def __init__(self, config: ExperimentConfig) -> None:
        self.config = config

    def to_mapping(self, outputs: list[Path] | None = None) -> dict[str, Any]:
        return {
            "version": __version__,
            "python": platform.python_version(),
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "config": self.config.to_mapping(),
            "outputs": sorted(p.name for p in outputs or []),
        }

    def write(self, tables: TableRenderer) -> Path:
        return tables.write_json(settings.output.manifest_name, self.to_mapping(tables.written))

    @staticmethod
    def read(path: str | Path) -> dict[str, Any]:
        return json.loads(Path(path).read_text(encoding="utf-8"))
