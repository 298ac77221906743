from enum import Enum


class ExperimentKind(str, Enum):
    """Experiment drivers reachable from the command line."""

    BASIS_STUDY = "basis-study"
    EOS = "eos"
    FRIEDEL = "friedel"
    STRINGS = "strings"
    AVQITE_ACCURACY = "avqite-accuracy"
    AVQMETTS = "avqmetts"
    NCX_SCALING = "ncx-scaling"
    ED_REFERENCE = "ed-reference"
    CALIBRATE_MU = "calibrate-mu"
