"""
Chemical-potential calibration for a target filling.
"""

import logging
from dataclasses import dataclass
from typing import Callable

from src.core.errors import NonConvergenceError
from src.core.main_config import settings
from src.model.grand_canonical_oracle import GrandCanonicalOracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class MuPlateau:
    """Range of mu whose low-temperature state holds ``particles`` fermions."""

    particles: int
    lower: float
    upper: float

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    def __contains__(self, mu: float) -> bool:
        return self.lower <= mu <= self.upper


class ChemicalPotentialCalibrator:
    """
    Locates the plateau of mu values with a given ground-state particle number.

    <N> at large beta is a smoothed staircase in mu; the plateau edges are
    the points where it crosses ``k - 1/2`` and ``k + 1/2``. Edges outside
    the search window are clipped to the window.
    """

    @staticmethod
    def plateau(L: int, h: float, target_filling: float) -> MuPlateau:
        if not 0.0 < target_filling < 1.0:
            raise ValueError(f"Target filling must lie in (0, 1), got {target_filling}")
        sampling = settings.sampling
        beta = sampling.calibration_beta
        lo, hi = sampling.calibration_window
        k = int(target_filling * L + 0.5)
        oracle = GrandCanonicalOracle(L, h)

        def number(mu: float) -> float:
            return oracle.particle_number(mu, beta)

        lower = ChemicalPotentialCalibrator._crossing(number, k - 0.5, lo, hi)
        upper = ChemicalPotentialCalibrator._crossing(number, k + 0.5, lo, hi)
        if upper - lower <= sampling.calibration_tol:
            raise NonConvergenceError(
                f"No mu plateau with {k} particles for L={L}, h={h} in [{lo}, {hi}]"
            )
        logger.debug("L=%d h=%g: %d particles for mu in [%.6f, %.6f]", L, h, k, lower, upper)
        return MuPlateau(k, lower, upper)

    @staticmethod
    def calibrate_mu(L: int, h: float, target_filling: float) -> float:
        """Midpoint of the plateau holding ``round(target_filling * L)`` fermions."""
        return ChemicalPotentialCalibrator.plateau(L, h, target_filling).midpoint

    @staticmethod
    def _crossing(fn: Callable[[float], float], level: float, lo: float, hi: float) -> float:
        """Smallest mu in [lo, hi] with fn(mu) >= level, for non-decreasing fn."""
        if fn(lo) >= level:
            return lo
        if fn(hi) < level:
            return hi
        tol = settings.sampling.calibration_tol
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if fn(mid) >= level:
                hi = mid
            else:
                lo = mid
        return 0.5 * (lo + hi)
