"""
Collapse-basis comparison: running estimates versus kept thermal steps.
"""

import logging
from pathlib import Path

from src.controllers.experiments.base import Experiment, tag
from src.core.errors import UndefinedMetricError
from src.core.types.enums.experiment import ExperimentKind
from src.metts.chain_runner import run_chain
from src.metts.estimators import running_estimates
from src.metts.metrics import ErrorMetrics
from src.observables.densities import ENERGY, NUMBER

logger = logging.getLogger(__name__)

HEADER = [
    "L", "h", "mu", "beta", "schedule", "k",
    "epsilon", "epsilon_stderr", "delta_epsilon",
    "n", "n_stderr", "delta_n",
]


def _relative(value: float, reference: float) -> float:
    try:
        return ErrorMetrics.relative_error(value, reference)
    except UndefinedMetricError:
        return float("nan")


class BasisStudyExperiment(Experiment):
    kind = ExperimentKind.BASIS_STUDY

    def run(self) -> list[Path]:
        cfg = self.config
        rows = []
        files: list[Path] = []
        for L, h in self.model_grid():
            mu = self.resolve_mu(L, h)
            params = cfg.model_params(L, h, mu)
            oracle = self.ed_oracle(L, h)
            for beta in cfg.betas:
                eps_ed = n_ed = float("nan")
                if oracle is not None:
                    eps_ed, n_ed = oracle.densities(mu, beta)
                    rows.append([L, h, mu, beta, "ed", 0, eps_ed, 0.0, 0.0, n_ed, 0.0, 0.0])
                for schedule in cfg.schedules:
                    samples = run_chain(params, beta, cfg.walk_config(schedule=schedule))
                    files += self.results.sample_set(f"samples_L{L}_h{tag(h)}_b{tag(beta)}_{schedule}", samples)
                    energy = running_estimates(samples, ENERGY)
                    number = running_estimates(samples, NUMBER)
                    for (k, e, e_err), (_, n, n_err) in zip(energy, number):
                        rows.append(
                            [
                                L, h, mu, beta, schedule, k,
                                e / L, e_err / L, _relative(e / L, eps_ed),
                                n / L, n_err / L, _relative(n / L, n_ed),
                            ]
                        )
                    logger.info(
                        "basis %s L=%d beta=%g: final delta_epsilon=%.3e",
                        schedule, L, beta, rows[-1][8],
                    )
        return [self.tables.write_csv("basis_study.csv", HEADER, rows), *files]
