from enum import Enum


class TieBreak(str, Enum):
    """How near-equal candidate scores are ordered during ansatz growth."""

    LOW_WEIGHT = "low-weight"  # lower weight first, then pool order
    ALPHABETICAL = "alphabetical"  # label string order
