"""
Ensemble estimators over kept records.
"""

import math

from src.core.entities.sample_set import SampleSet
from src.core.errors import InsufficientSamplesError
from src.utils.stats.stats_helper import StatsHelper


def estimate(samples: SampleSet, name: str, blocked: bool = False) -> tuple[float, float]:
    """
    ``(mean, stderr)`` over every kept record, walks pooled.

    ``blocked=True`` uses walk means as independent blocks instead.

    Raises:
        InsufficientSamplesError: with fewer than two kept records (or walks).
    """
    if blocked:
        return StatsHelper.blocked_stderr(samples.per_walk(name))
    return StatsHelper.mean_stderr(samples.values(name))


def running_estimates(samples: SampleSet, name: str) -> list[tuple[int, float, float]]:
    """``(k, mean, stderr)`` using the first ``k`` kept steps of every walk."""
    grid = samples.per_walk(name)
    if grid.size == 0:
        raise InsufficientSamplesError(f"No kept records of {name!r}")
    rows = []
    for k in range(1, grid.shape[1] + 1):
        window = grid[:, :k].ravel()
        if window.size < 2:
            rows.append((k, float(window.mean()), math.nan))
            continue
        mean, err = StatsHelper.mean_stderr(window)
        rows.append((k, mean, err))
    return rows


def step_means(samples: SampleSet, name: str) -> list[tuple[int, float]]:
    """Mean over walks at each thermal step, warm-up included."""
    grid = samples.per_walk(name, kept_only=False)
    return [(s + 1, float(grid[:, s].mean())) for s in range(grid.shape[1])]
