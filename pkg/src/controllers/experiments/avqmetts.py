"""
METTS driven by the variational backend.
"""

import logging
from pathlib import Path

from src.controllers.experiments.base import Experiment, tag
from src.core.main_config import settings
from src.core.types.enums.backend import BackendKind
from src.core.types.enums.experiment import ExperimentKind
from src.metts.chain_runner import ChainRunner
from src.metts.estimators import estimate, step_means
from src.metts.metrics import ErrorMetrics
from src.observables.densities import ENERGY, NUMBER
from src.services.trace_log import TraceLog

logger = logging.getLogger(__name__)

HEADER = [
    "L", "h", "mu", "beta", "schedule", "samples",
    "epsilon", "epsilon_stderr", "epsilon_ed", "delta_epsilon",
    "n", "n_stderr", "n_ed", "delta_n",
]
STEP_HEADER = ["L", "h", "mu", "beta", "schedule", "step", "epsilon_step_mean", "n_step_mean"]


class AvqmettsExperiment(Experiment):
    kind = ExperimentKind.AVQMETTS

    def run(self) -> list[Path]:
        cfg = self.config
        rows, step_rows = [], []
        files: list[Path] = []
        trace = TraceLog(settings.output.trace_capacity)
        for L, h in self.model_grid():
            mu = self.resolve_mu(L, h)
            params = cfg.model_params(L, h, mu)
            oracle = self.ed_oracle(L, h)
            for schedule in cfg.schedules:
                for beta in cfg.betas:
                    runner = ChainRunner(params, beta, cfg.walk_config(schedule=schedule, backend=BackendKind.AVQITE))
                    samples = runner.run()
                    trace.extend(runner.trace.latest())
                    files += self.results.sample_set(f"avqmetts_L{L}_h{tag(h)}_b{tag(beta)}_{schedule}", samples)
                    e, e_err = estimate(samples, ENERGY)
                    n, n_err = estimate(samples, NUMBER)
                    eps, n_dens = e / L, n / L
                    eps_ed = n_ed = d_eps = d_n = float("nan")
                    if oracle is not None:
                        eps_ed, n_ed = oracle.densities(mu, beta)
                        d_eps = ErrorMetrics.relative_error(eps, eps_ed) if eps_ed else float("nan")
                        d_n = ErrorMetrics.relative_error(n_dens, n_ed) if n_ed else float("nan")
                    rows.append(
                        [
                            L, h, mu, beta, schedule, len(samples.kept_records()),
                            eps, e_err / L, eps_ed, d_eps, n_dens, n_err / L, n_ed, d_n,
                        ]
                    )
                    for (step, e_step), (_, n_step) in zip(step_means(samples, ENERGY), step_means(samples, NUMBER)):
                        step_rows.append([L, h, mu, beta, schedule, step, e_step / L, n_step / L])
                    logger.info("AVQMETTS %s L=%d beta=%g: delta_epsilon=%.3e", schedule, L, beta, d_eps)
        files = [
            self.tables.write_csv("avqmetts.csv", HEADER, rows),
            self.tables.write_csv("avqmetts_steps.csv", STEP_HEADER, step_rows),
            *files,
        ]
        trace_file = self.write_traces(trace)
        return files + ([trace_file] if trace_file else [])
