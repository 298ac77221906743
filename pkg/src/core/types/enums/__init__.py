from .backend import BackendKind
from .basis import Basis
from .experiment import ExperimentKind
from .tie_break import TieBreak
