"""
Site-resolved occupations and their peak structure.
"""

import logging
from pathlib import Path

from src.controllers.experiments.base import Experiment, tag
from src.core.errors import UndefinedMetricError
from src.core.types.enums.experiment import ExperimentKind
from src.metts.chain_runner import default_plan, run_chain
from src.metts.estimators import estimate
from src.metts.metrics import ErrorMetrics
from src.observables.densities import NUMBER
from src.observables.occupations import count_peaks, site_occupations

logger = logging.getLogger(__name__)

HEADER = [
    "L", "h", "mu", "beta", "peaks", "peaks_ed",
    "N", "N_stderr", "N_ed", "max_site_relative_error",
]


class FriedelExperiment(Experiment):
    kind = ExperimentKind.FRIEDEL

    def run(self) -> list[Path]:
        cfg = self.config
        rows = []
        files: list[Path] = []
        for L, h in self.model_grid():
            mu = self.resolve_mu(L, h)
            plan = default_plan(cfg.model_params(L, h, mu), site_occupations=True)
            oracle = self.ed_oracle(L, h, with_vectors=True)
            for beta in cfg.betas:
                samples = run_chain(cfg.model_params(L, h, mu), beta, cfg.walk_config(), plan)
                profile = site_occupations(samples, L)
                n_mean, n_err = estimate(samples, NUMBER)
                stem = f"L{L}_h{tag(h)}_b{tag(beta)}"
                files.append(self.results.profile(f"profile_{stem}.csv", profile))
                peaks_ed, n_ed, site_error = -1, float("nan"), float("nan")
                if oracle is not None:
                    exact = oracle.site_occupations(mu, beta)
                    files.append(self.results.profile(f"profile_ed_{stem}.csv", exact))
                    peaks_ed = count_peaks(exact)
                    n_ed = exact.total
                    try:
                        site_error = ErrorMetrics.max_site_relative_error(profile.values, exact.values)
                    except UndefinedMetricError:
                        pass
                peaks = count_peaks(profile)
                logger.info("Friedel L=%d h=%g beta=%g: %d peaks, <N>=%.4f", L, h, beta, peaks, n_mean)
                rows.append([L, h, mu, beta, peaks, peaks_ed, n_mean, n_err, n_ed, site_error])
        return [self.tables.write_csv("friedel.csv", HEADER, rows), *files]
