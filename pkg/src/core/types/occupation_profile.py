from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt


@dataclass(frozen=True, slots=True)
class OccupationProfile:
    """Site-resolved fermion occupations <n_i>, i = 1..L."""

    values: npt.NDArray[np.float64]
    stderr: Optional[npt.NDArray[np.float64]] = None

    @property
    def total(self) -> float:
        return float(np.sum(self.values))

    def __len__(self) -> int:
        return len(self.values)
