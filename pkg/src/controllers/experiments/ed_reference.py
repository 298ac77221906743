"""
Exact-diagonalization golden values.
"""

from pathlib import Path

from src.controllers.experiments.base import Experiment
from src.core.types.enums.experiment import ExperimentKind
from src.model.grand_canonical_oracle import GrandCanonicalOracle


class EdReferenceExperiment(Experiment):
    """Writes (L, h, mu, beta, observable_name, value) rows for every grid point."""

    kind = ExperimentKind.ED_REFERENCE

    def run(self) -> list[Path]:
        cfg = self.config
        rows = []
        for L, h in self.model_grid():
            mu = self.resolve_mu(L, h)
            oracle = GrandCanonicalOracle(L, h, with_vectors=True)
            ground = min(
                float((block.energies - mu * n).min())
                for block, n in zip(oracle.oracle.blocks, oracle.block_numbers)
            )
            for beta in cfg.betas:
                eps, n = oracle.densities(mu, beta)
                rows.append((L, h, mu, beta, "epsilon", eps))
                rows.append((L, h, mu, beta, "n", n))
                rows.append((L, h, mu, beta, "ground_energy_gc", ground))
                profile = oracle.site_occupations(mu, beta)
                for site, value in enumerate(profile.values, start=1):
                    rows.append((L, h, mu, beta, f"n_{site}", float(value)))
        return [self.results.fixtures("ed_reference.csv", rows)]
