"""Entities with behaviour."""

from src.core.entities.ansatz import Ansatz
from src.core.entities.sample_set import SampleRecord, SampleSet
from src.core.entities.string_histogram import StringHistogram

__all__ = ["Ansatz", "SampleRecord", "SampleSet", "StringHistogram"]
