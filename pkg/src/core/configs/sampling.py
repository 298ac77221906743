from dataclasses import dataclass


@dataclass(slots=True)
class SamplingConfig:
    """Markov-chain and measurement defaults."""

    warmup_exact: int = 10
    warmup_avqite: int = 1
    shots_per_metts: int = 50
    calibration_beta: float = 200.0
    calibration_window: tuple[float, float] = (-2.0, 2.0)
    calibration_tol: float = 1e-6
