"""
StringHistogram module
======================

Run-length statistics of z-basis bitstrings.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


@dataclass
class StringHistogram:
    """
    Raw run counts over ``total_samples`` bitstrings.

    Maximal runs of 1s are strings, maximal runs of 0s anti-strings.
    ``C_l = count_l / total_samples``; several runs of one bitstring all
    count, so a single ``C_l`` may exceed one. Raw counts are kept so
    histograms from different workers add exactly.
    """

    string_counts: Counter[int] = field(default_factory=Counter)
    antistring_counts: Counter[int] = field(default_factory=Counter)
    total_samples: int = 0

    @property
    def strings(self) -> dict[int, float]:
        return self._normalized(self.string_counts)

    @property
    def antistrings(self) -> dict[int, float]:
        return self._normalized(self.antistring_counts)

    def _normalized(self, counts: Counter[int]) -> dict[int, float]:
        if self.total_samples == 0:
            return {}
        return {l: c / self.total_samples for l, c in sorted(counts.items())}

    def mean_length(self, kind: str = "string") -> float:
        counts = self._counts(kind)
        runs = sum(counts.values())
        if runs == 0:
            return 0.0
        return sum(l * c for l, c in counts.items()) / runs

    def variance(self, kind: str = "string") -> float:
        """Variance of the run-length distribution."""
        counts = self._counts(kind)
        runs = sum(counts.values())
        if runs == 0:
            return 0.0
        mean = self.mean_length(kind)
        return sum(c * (l - mean) ** 2 for l, c in counts.items()) / runs

    def stderr(self, kind: str = "string") -> dict[int, float]:
        """Poisson error ``sqrt(count) / total`` of every ``C_l``."""
        if self.total_samples == 0:
            return {}
        counts = self._counts(kind)
        return {l: c**0.5 / self.total_samples for l, c in sorted(counts.items())}

    def _counts(self, kind: str) -> Counter[int]:
        if kind == "string":
            return self.string_counts
        if kind == "antistring":
            return self.antistring_counts
        raise ValueError(f"Unknown run kind {kind!r}; expected 'string' or 'antistring'")

    def __add__(self, other: StringHistogram) -> StringHistogram:
        return StringHistogram(
            self.string_counts + other.string_counts,
            self.antistring_counts + other.antistring_counts,
            self.total_samples + other.total_samples,
        )
