"""One runner per experiment kind."""

from src.controllers.experiments.avqite_accuracy import AvqiteAccuracyExperiment
from src.controllers.experiments.avqmetts import AvqmettsExperiment
from src.controllers.experiments.base import Experiment
from src.controllers.experiments.basis_study import BasisStudyExperiment
from src.controllers.experiments.calibrate_mu import CalibrateMuExperiment
from src.controllers.experiments.ed_reference import EdReferenceExperiment
from src.controllers.experiments.eos import EosExperiment
from src.controllers.experiments.friedel import FriedelExperiment
from src.controllers.experiments.ncx_scaling import NcxScalingExperiment
from src.controllers.experiments.strings import StringsExperiment

EXPERIMENTS: dict = {
    cls.kind: cls
    for cls in (
        AvqiteAccuracyExperiment,
        AvqmettsExperiment,
        BasisStudyExperiment,
        CalibrateMuExperiment,
        EdReferenceExperiment,
        EosExperiment,
        FriedelExperiment,
        NcxScalingExperiment,
        StringsExperiment,
    )
}

__all__ = ["EXPERIMENTS", "Experiment"]
