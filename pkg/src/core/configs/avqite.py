from dataclasses import dataclass

from src.core.types.enums.tie_break import TieBreak


@dataclass(slots=True)
class AvqiteConfig:
    """Defaults of the adaptive variational imaginary-time propagation."""

    step_cap: float = 0.02
    dt_min: float = 1e-4
    dt_max: float = 0.1
    threshold: float = 1e-3
    tikhonov: float = 1e-6
    tie_tolerance: float = 1e-9
    min_improvement: float = 1e-12
    tie_break: TieBreak = TieBreak.LOW_WEIGHT
    candidate_chunk: int = 256
    fail_on_stall: bool = True
