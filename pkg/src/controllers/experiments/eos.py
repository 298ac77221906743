"""
Equation of state: energy and particle densities along a mu sweep.
"""

import logging
from pathlib import Path

from src.controllers.experiments.base import Experiment
from src.core.types.enums.experiment import ExperimentKind
from src.metts.chain_runner import run_chain
from src.metts.estimators import estimate
from src.model.free_fermion import FreeFermionReference
from src.observables.densities import ENERGY, NUMBER

logger = logging.getLogger(__name__)

HEADER = [
    "L", "h", "beta", "mu",
    "epsilon", "epsilon_stderr", "n", "n_stderr",
    "epsilon_ed", "n_ed", "epsilon_free", "n_free",
]


class EosExperiment(Experiment):
    """One METTS ensemble per (L, h, beta, mu) grid point."""

    kind = ExperimentKind.EOS

    def run(self) -> list[Path]:
        cfg = self.config
        rows = []
        for L, h in self.model_grid():
            oracle = self.ed_oracle(L, h)
            for beta in cfg.betas:
                for mu in cfg.mu_grid:
                    samples = run_chain(cfg.model_params(L, h, mu), beta, cfg.walk_config())
                    e_mean, e_err = estimate(samples, ENERGY)
                    n_mean, n_err = estimate(samples, NUMBER)
                    eps_ed = n_ed = float("nan")
                    if oracle is not None:
                        eps_ed, n_ed = oracle.densities(mu, beta)
                    eps_ff = n_ff = float("nan")
                    if h == 0.0:
                        eps_ff, n_ff = FreeFermionReference.free_fermion_reference(L, beta, mu)
                    rows.append(
                        [L, h, beta, mu, e_mean / L, e_err / L, n_mean / L, n_err / L, eps_ed, n_ed, eps_ff, n_ff]
                    )
                logger.info("EOS L=%d h=%g beta=%g: %d mu points", L, h, beta, len(cfg.mu_grid))
        return [self.tables.write_csv("eos.csv", HEADER, rows)]
