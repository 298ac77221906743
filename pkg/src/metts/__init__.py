"""METTS sampling: backends, chains, estimators and error metrics."""

from src.metts.backends import AvqiteBackend, ExactBackend, make_backend
from src.metts.chain_runner import (
    ChainRunner,
    WalkJob,
    WalkResult,
    default_plan,
    run_chain,
    run_walk,
)
from src.metts.estimators import estimate, running_estimates, step_means
from src.metts.measurement_plan import MeasurementPlan
from src.metts.metrics import ErrorMetrics, avqite_deviation, relative_error, spread_metric

__all__ = [
    "AvqiteBackend",
    "ChainRunner",
    "ErrorMetrics",
    "ExactBackend",
    "MeasurementPlan",
    "WalkJob",
    "WalkResult",
    "avqite_deviation",
    "default_plan",
    "estimate",
    "make_backend",
    "relative_error",
    "run_chain",
    "run_walk",
    "running_estimates",
    "spread_metric",
    "step_means",
]
