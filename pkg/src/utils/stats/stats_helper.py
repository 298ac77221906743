"""
Sample statistics shared by estimators and experiment runners.
"""

from typing import Sequence

import numpy as np
import numpy.typing as npt

from src.core.errors import InsufficientSamplesError


class StatsHelper:
    """Static helpers over 1-D and (walk, step) shaped sample arrays."""

    @staticmethod
    def mean_stderr(values: Sequence[float] | npt.NDArray[np.float64]) -> tuple[float, float]:
        """Sample mean and ``std(ddof=1) / sqrt(S)``."""
        data = np.asarray(values, dtype=np.float64)
        if data.size < 2:
            raise InsufficientSamplesError(f"Need at least 2 samples, got {data.size}")
        return float(data.mean()), float(data.std(ddof=1) / np.sqrt(data.size))

    @staticmethod
    def blocked_stderr(per_walk: npt.NDArray[np.float64]) -> tuple[float, float]:
        """
        Mean and stderr treating each walk (row) as one block.

        Correlations inside a walk are absorbed into the block mean.
        """
        data = np.asarray(per_walk, dtype=np.float64)
        if data.ndim != 2:
            raise ValueError(f"Blocked estimate needs a (walk, step) array, got shape {data.shape}")
        if data.shape[0] < 2:
            raise InsufficientSamplesError(f"Blocked estimate needs >= 2 walks, got {data.shape[0]}")
        blocks = data.mean(axis=1)
        return float(data.mean()), float(blocks.std(ddof=1) / np.sqrt(blocks.size))

    @staticmethod
    def power_law_fit(x: Sequence[float], y: Sequence[float]) -> tuple[float, float]:
        """Least-squares fit of ``log y = log a + b log x``; returns ``(a, b)``."""
        xs = np.asarray(x, dtype=np.float64)
        ys = np.asarray(y, dtype=np.float64)
        if xs.size < 3:
            raise InsufficientSamplesError(f"Power-law fit needs >= 3 points, got {xs.size}")
        if np.any(xs <= 0) or np.any(ys <= 0):
            raise ValueError("Power-law fit needs strictly positive data")
        b, log_a = np.polyfit(np.log(xs), np.log(ys), 1)
        return float(np.exp(log_a)), float(b)

    @staticmethod
    def quantiles(
        values: Sequence[float], qs: Sequence[float] = (0.1, 0.25, 0.5, 0.75, 0.9)
    ) -> dict[float, float]:
        data = np.asarray(values, dtype=np.float64)
        return {float(q): float(np.quantile(data, q)) for q in qs}
