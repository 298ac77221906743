"""
Chemical-potential plateaus for a target filling.
"""

import logging
from pathlib import Path

from src.controllers.experiments.base import Experiment
from src.core.types.enums.experiment import ExperimentKind
from src.model.calibration import ChemicalPotentialCalibrator

logger = logging.getLogger(__name__)

HEADER = ["L", "h", "target_filling", "particles", "mu_lower", "mu_upper", "mu"]


class CalibrateMuExperiment(Experiment):
    kind = ExperimentKind.CALIBRATE_MU

    def run(self) -> list[Path]:
        target = self.config.target_filling
        rows = []
        for L, h in self.model_grid():
            plateau = ChemicalPotentialCalibrator.plateau(L, h, target)
            logger.info(
                "L=%d h=%g: %d particles for mu in [%.6f, %.6f]",
                L, h, plateau.particles, plateau.lower, plateau.upper,
            )
            rows.append([L, h, target, plateau.particles, plateau.lower, plateau.upper, plateau.midpoint])
        return [self.tables.write_csv("calibrate_mu.csv", HEADER, rows)]
