"""
String and anti-string length statistics from z-basis bitstrings.
"""

import logging
from pathlib import Path

from src.controllers.experiments.base import Experiment, tag
from src.core.types.enums.experiment import ExperimentKind
from src.metts.chain_runner import default_plan, run_chain
from src.observables.bitstrings import string_histogram

logger = logging.getLogger(__name__)

HEADER = [
    "L", "h", "mu", "beta", "total_samples",
    "string_mean", "string_variance", "antistring_mean", "antistring_variance",
]


class StringsExperiment(Experiment):
    kind = ExperimentKind.STRINGS

    def run(self) -> list[Path]:
        cfg = self.config
        rows = []
        files: list[Path] = []
        for L, h in self.model_grid():
            mu = self.resolve_mu(L, h)
            plan = default_plan(cfg.model_params(L, h, mu), bitstring_shots=cfg.shots_per_metts)
            for beta in cfg.betas:
                samples = run_chain(cfg.model_params(L, h, mu), beta, cfg.walk_config(), plan)
                histogram = string_histogram(samples.bitstrings())
                files.append(self.results.histogram(f"histogram_L{L}_h{tag(h)}_b{tag(beta)}.csv", histogram))
                rows.append(
                    [
                        L, h, mu, beta, histogram.total_samples,
                        histogram.mean_length("string"), histogram.variance("string"),
                        histogram.mean_length("antistring"), histogram.variance("antistring"),
                    ]
                )
                logger.info("strings L=%d h=%g beta=%g: %d bitstrings", L, h, beta, histogram.total_samples)
        return [self.tables.write_csv("strings.csv", HEADER, rows), *files]
