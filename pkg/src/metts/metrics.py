"""
Error metrics against exact references.
"""

from typing import Sequence

import numpy as np

from src.core.errors import UndefinedMetricError


def _denominator(ed_value: float) -> float:
    if ed_value == 0.0:
        raise UndefinedMetricError("Relative metric undefined for a zero reference value")
    return abs(ed_value)


class ErrorMetrics:
    """Static relative-error measures."""

    @staticmethod
    def relative_error(mean: float, ed_value: float) -> float:
        """|mean - ed| / |ed|."""
        return abs(mean - ed_value) / _denominator(ed_value)

    @staticmethod
    def spread_metric(per_sample_values: Sequence[float], ed_value: float) -> float:
        """Mean of |(O_i - ed) / ed| over the samples."""
        values = np.asarray(per_sample_values, dtype=np.float64)
        if values.size < 1:
            raise ValueError("spread_metric needs at least one sample")
        return float(np.mean(np.abs(values - ed_value)) / _denominator(ed_value))

    @staticmethod
    def avqite_deviation(av_value: float, ite_value: float, ed_value: float) -> float:
        """|av - ite| / |ed|."""
        return abs(av_value - ite_value) / _denominator(ed_value)

    @staticmethod
    def max_site_relative_error(values: Sequence[float], ed_values: Sequence[float]) -> float:
        """Largest relative error over a site-resolved profile."""
        got = np.asarray(values, dtype=np.float64)
        ref = np.asarray(ed_values, dtype=np.float64)
        if got.shape != ref.shape:
            raise ValueError(f"Profile shapes differ: {got.shape} vs {ref.shape}")
        if np.any(ref == 0.0):
            raise UndefinedMetricError("Site profile reference has a zero entry")
        return float(np.max(np.abs(got - ref) / np.abs(ref)))


relative_error = ErrorMetrics.relative_error
spread_metric = ErrorMetrics.spread_metric
avqite_deviation = ErrorMetrics.avqite_deviation
