from .experiment import ExperimentConfig
from .model import ModelParams
from .walk import WalkConfig
