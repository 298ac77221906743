"""
z-basis bitstring sampling and run statistics.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from src.core.entities.string_histogram import StringHistogram
from src.core.types.statevector import Statevector
from src.statevector.overlap import check_normalized
from src.utils.bits.bit_helper import BitHelper


def sample_bitstrings(state: Statevector, shots: int, rng: np.random.Generator) -> list[str]:
    """Independent Born-rule shots in the z basis, site 0 first."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    check_normalized(state)
    probs = np.abs(state) ** 2
    probs = probs / probs.sum()
    n_sites = int(state.shape[0]).bit_length() - 1
    outcomes = rng.choice(probs.size, size=shots, p=probs)
    return [BitHelper.to_bitstring(i, n_sites) for i in outcomes]


def run_lengths(bits: str) -> tuple[list[int], list[int]]:
    """Lengths of maximal runs of 1s and of 0s."""
    ones: list[int] = []
    zeros: list[int] = []
    if not bits:
        return ones, zeros
    current, length = bits[0], 1
    for ch in bits[1:]:
        if ch == current:
            length += 1
            continue
        (ones if current == "1" else zeros).append(length)
        current, length = ch, 1
    (ones if current == "1" else zeros).append(length)
    return ones, zeros


def string_histogram(bitstrings: Iterable[str]) -> StringHistogram:
    """
    Raises:
        ValueError: on empty input, lengths that differ or non-binary characters.
    """
    data = list(bitstrings)
    if not data:
        raise ValueError("string_histogram needs at least one bitstring")
    width = len(data[0])
    histogram = StringHistogram(total_samples=len(data))
    for bits in data:
        if len(bits) != width:
            raise ValueError(f"Bitstring {bits!r} has length {len(bits)}, expected {width}")
        if set(bits) - {"0", "1"}:
            raise ValueError(f"Bitstring {bits!r} is not binary")
        ones, zeros = run_lengths(bits)
        histogram.string_counts.update(ones)
        histogram.antistring_counts.update(zeros)
    return histogram
