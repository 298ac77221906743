"""
CNOT-count scaling with system size at fixed filling.
"""

import logging
from pathlib import Path

import numpy as np

from src.controllers.experiments.base import Experiment
from src.controllers.experiments.cps_sampling import CpsJob, CpsResult, run_cps_job
from src.core.types.enums.basis import Basis
from src.core.types.enums.experiment import ExperimentKind
from src.services.worker_pool import WorkerPool
from src.utils.stats.stats_helper import StatsHelper

logger = logging.getLogger(__name__)

HEADER = ["L", "h", "mu", "basis", "beta", "samples", "n_cx_mean", "n_cx_std", "n_cx_min", "n_cx_max", "n_theta_mean"]
FIT_HEADER = ["h", "basis", "beta", "a", "b"]


class NcxScalingExperiment(Experiment):
    """
    N_CX statistics per (L, basis, beta) and a power-law fit ``a L^b``.

    Each L uses its own calibrated mu unless ``model.mu`` pins it.
    """

    kind = ExperimentKind.NCX_SCALING

    def run(self) -> list[Path]:
        cfg = self.config
        rows, fit_rows = [], []
        pool = WorkerPool(cfg.workers)
        means: dict[tuple[float, str, float], list[tuple[int, float]]] = {}
        for L, h in self.model_grid():
            mu = self.resolve_mu(L, h)
            params = cfg.model_params(L, h, mu)
            for basis_tag in cfg.bases:
                basis = Basis.parse(basis_tag)
                for beta in cfg.betas:
                    jobs = [
                        CpsJob(params, basis, beta, i, cfg.master_seed, cfg.avqite, with_exact=False)
                        for i in range(cfg.n_cps)
                    ]
                    results: list[CpsResult] = pool.map(run_cps_job, jobs)
                    ncx = np.array([r.n_cx for r in results], dtype=np.float64)
                    std = float(ncx.std(ddof=1)) if ncx.size > 1 else 0.0
                    rows.append(
                        [
                            L, h, mu, basis.value, beta, ncx.size, float(ncx.mean()), std,
                            float(ncx.min()), float(ncx.max()),
                            float(np.mean([r.n_theta for r in results])),
                        ]
                    )
                    means.setdefault((h, basis.value, beta), []).append((L, float(ncx.mean())))
                    logger.info("N_CX L=%d basis=%s beta=%g: mean %.2f", L, basis.value, beta, ncx.mean())
        for (h, basis, beta), points in means.items():
            a = b = float("nan")
            if all(m > 0 for _, m in points):
                a, b = StatsHelper.power_law_fit([p[0] for p in points], [p[1] for p in points])
            else:
                logger.warning("Power-law fit skipped for basis=%s beta=%g: zero mean N_CX", basis, beta)
            fit_rows.append([h, basis, beta, a, b])
        return [
            self.tables.write_csv("ncx_scaling.csv", HEADER, rows),
            self.tables.write_csv("ncx_fit.csv", FIT_HEADER, fit_rows),
        ]
