"""
Measurement basis enum.
"""

from enum import Enum


class Basis(str, Enum):
    """Single-qubit eigenbasis used for product states and collapse."""

    X = "x"
    Y = "y"
    Z = "z"

    @classmethod
    def parse(cls, value: "str | Basis") -> "Basis":
        """Parse a basis tag, accepting either case."""
        if isinstance(value, Basis):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(
                f"Unknown basis tag {value!r}; expected one of x, y, z"
            ) from None
