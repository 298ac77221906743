from enum import Enum


class BackendKind(str, Enum):
    """Imaginary-time propagation backend of a METTS walk."""

    EXACT = "exact"
    AVQITE = "avqite"
