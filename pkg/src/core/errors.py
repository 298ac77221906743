"""
Exception hierarchy.

Value-level errors also derive from ``ValueError`` so callers that only know
about builtins still catch them.
"""


class Z2MettsError(Exception):
    """Root of every error raised by the package."""


class ConfigError(Z2MettsError, ValueError):
    """Invalid experiment configuration (CLI exit code 2)."""


class NonConvergenceError(Z2MettsError, RuntimeError):
    """A numerical procedure failed to converge (CLI exit code 3)."""


class GrowthStalledError(NonConvergenceError):
    """No pool generator lowers the McLachlan distance below threshold."""

    def __init__(self, message: str, mclachlan_sq: float) -> None:
        super().__init__(message)
        self.mclachlan_sq = mclachlan_sq

    def __reduce__(self):
        return type(self), (str(self), self.mclachlan_sq)


class DimensionMismatchError(Z2MettsError, ValueError):
    """Operands live on registers of different size."""


class NonHermitianError(Z2MettsError, ValueError):
    """An operator expected to be Hermitian carries complex coefficients."""


class NormalizationError(Z2MettsError, ValueError):
    """A state expected to be normalized is not."""


class DimensionGuardError(Z2MettsError, ValueError):
    """Dense exact diagonalization requested above the size guard."""


class UndefinedMetricError(Z2MettsError, ValueError):
    """An error metric would divide by a vanishing reference value."""


class InsufficientSamplesError(Z2MettsError, ValueError):
    """An estimator received too few kept records."""


class ChainStepError(Z2MettsError):
    """A backend failure inside a METTS walk, tagged with its position."""

    def __init__(self, walk: int, step: int, cause: Exception) -> None:
        super().__init__(f"walk {walk}, step {step}: {cause}")
        self.walk = walk
        self.step = step
        self.cause = cause

    def __reduce__(self):
        return type(self), (self.walk, self.step, self.cause)
