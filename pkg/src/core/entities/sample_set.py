"""
SampleSet module
================

Per-(walk, step) records of a METTS ensemble.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator

import numpy as np
import numpy.typing as npt


@dataclass(frozen=True, slots=True)
class SampleRecord:
    """
    Observables of the METTS produced at one thermal step.

    ``basis`` is the basis of the CPS that was evolved at this step; warm-up
    records carry ``kept = False`` and stay in the set.
    """

    walk: int
    step: int
    kept: bool
    basis: str
    cps: str
    values: dict[str, float]
    bitstrings: tuple[str, ...] = ()


@dataclass
class SampleSet:
    """
    Ordered collection of records, walk-major then step.

    Every walk contributes the same number of steps.
    """

    records: list[SampleRecord] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        counts: dict[int, int] = {}
        for r in self.records:
            counts[r.walk] = counts.get(r.walk, 0) + 1
        if len(set(counts.values())) > 1:
            raise ValueError(f"Walks contribute unequal step counts: {counts}")

    # ------------------------------------------------------------------ #
    # Shape
    # ------------------------------------------------------------------ #
    @property
    def walks(self) -> list[int]:
        return sorted({r.walk for r in self.records})

    @property
    def n_walks(self) -> int:
        return len(self.walks)

    @property
    def names(self) -> list[str]:
        """Observable names in first-seen order."""
        seen: dict[str, None] = {}
        for r in self.records:
            for name in r.values:
                seen.setdefault(name, None)
        return list(seen)

    def kept_records(self) -> list[SampleRecord]:
        return [r for r in self.records if r.kept]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[SampleRecord]:
        return iter(self.records)

    # ------------------------------------------------------------------ #
    # Views
    # ------------------------------------------------------------------ #
    def values(self, name: str, kept_only: bool = True) -> npt.NDArray[np.float64]:
        rows = self.kept_records() if kept_only else self.records
        try:
            return np.array([r.values[name] for r in rows], dtype=np.float64)
        except KeyError:
            raise KeyError(f"Observable {name!r} was not recorded; have {self.names}") from None

    def per_walk(self, name: str, kept_only: bool = True) -> npt.NDArray[np.float64]:
        """(walk, step) array of one observable."""
        rows = self.kept_records() if kept_only else self.records
        grid: dict[int, list[float]] = {}
        for r in rows:
            grid.setdefault(r.walk, []).append(r.values[name])
        return np.array([grid[w] for w in sorted(grid)], dtype=np.float64)

    def bitstrings(self, kept_only: bool = True) -> list[str]:
        rows = self.kept_records() if kept_only else self.records
        return [b for r in rows for b in r.bitstrings]

    def merged(self, other: SampleSet) -> SampleSet:
        """Concatenate two ensembles; walk indices of ``other`` are shifted."""
        offset = max(self.walks, default=-1) + 1
        shifted = [
            SampleRecord(r.walk + offset, r.step, r.kept, r.basis, r.cps, r.values, r.bitstrings)
            for r in other.records
        ]
        return SampleSet(self.records + shifted, dict(self.metadata))
