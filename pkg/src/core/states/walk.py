"""
Walk configuration.
"""

from dataclasses import dataclass, field
from typing import Optional

from src.core.configs.avqite import AvqiteConfig
from src.core.main_config import settings
from src.core.types.collapse_schedule import CollapseSchedule
from src.core.types.enums.backend import BackendKind


@dataclass(frozen=True, slots=True)
class WalkConfig:
    """
    Settings of one METTS ensemble.

    Attributes:
        s_w:         Number of independent walks.
        s_0:         Kept (post-warm-up) samples per walk.
        warmup:      Discarded initial steps; ``None`` picks the backend default.
        schedule:    Collapse-basis schedule.
        master_seed: Root of every per-(walk, step) random stream.
        backend:     Imaginary-time propagation backend.
        avqite:      Options of the variational backend.
        workers:     Process-pool size; 1 runs walks in-process.
    """

    s_w: int
    s_0: int
    schedule: CollapseSchedule
    master_seed: int = 0
    warmup: Optional[int] = None
    backend: BackendKind = BackendKind.EXACT
    avqite: AvqiteConfig = field(default_factory=AvqiteConfig)
    workers: int = 1

    def __post_init__(self) -> None:
        if self.s_w < 1 or self.s_0 < 1:
            raise ValueError(f"Need s_w >= 1 and s_0 >= 1, got s_w={self.s_w}, s_0={self.s_0}")
        if self.warmup is not None and self.warmup < 0:
            raise ValueError(f"warmup must be >= 0, got {self.warmup}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    @property
    def resolved_warmup(self) -> int:
        if self.warmup is not None:
            return self.warmup
        if self.backend == BackendKind.AVQITE:
            return settings.sampling.warmup_avqite
        return settings.sampling.warmup_exact

    @property
    def total_steps(self) -> int:
        return self.resolved_warmup + self.s_0
