from dataclasses import dataclass

import numpy as np
import numpy.typing as npt


@dataclass(frozen=True, slots=True)
class EomSolution:
    """Solved equations of motion at one ansatz snapshot."""

    theta_dot: npt.NDArray[np.float64]
    metric: npt.NDArray[np.float64]
    gradient: npt.NDArray[np.float64]
    mclachlan_sq: float
    residual: float = 0.0

    @property
    def reported_mclachlan_sq(self) -> float:
        return max(self.mclachlan_sq, 0.0)
