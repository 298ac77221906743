from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class GrowthEvent:
    """One generator appended at imaginary time ``tau``."""

    tau: float
    generator: str
    mclachlan_sq: float


@dataclass(slots=True)
class EvolutionReport:
    """
    Summary of one AVQITE propagation.

    ``log_norm_sq`` integrates ``-2 <K>`` along the variational path and
    estimates log ||exp(-tau K)|cps>||^2.
    """

    steps: int = 0
    final_mclachlan_sq: float = 0.0
    max_mclachlan_sq: float = 0.0
    growth_events: list[GrowthEvent] = field(default_factory=list)
    n_theta: int = 0
    n_cx: int = 0
    log_norm_sq: float = 0.0

    @property
    def appended_labels(self) -> list[str]:
        return [e.generator for e in self.growth_events]
