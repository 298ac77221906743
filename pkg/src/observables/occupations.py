"""
Site-resolved fermion occupations.
"""

from __future__ import annotations

import numpy as np

from src.core.entities.sample_set import SampleSet
from src.core.types.occupation_profile import OccupationProfile
from src.observables.densities import StateOrSamples
from src.pauli.action import basis_indices
from src.utils.bits.bit_helper import BitHelper
from src.utils.stats.stats_helper import StatsHelper


def site_key(site: int) -> str:
    return f"n_{site}"


def occupations_of_state(state: np.ndarray, L: int) -> np.ndarray:
    """<n_i> = sum_b |psi_b|^2 [spin i-1 != spin i] for i = 1..L."""
    n_sites = L + 1
    probs = np.abs(state) ** 2
    idx = basis_indices(probs.shape[0])
    return np.array([probs @ BitHelper.occupation(idx, n_sites, i) for i in range(1, L + 1)])


def site_occupations(source: StateOrSamples, L: int) -> OccupationProfile:
    """Occupation profile of a state, or the ensemble mean with stderr."""
    if isinstance(source, SampleSet):
        stats = [StatsHelper.mean_stderr(source.values(site_key(i))) for i in range(1, L + 1)]
        return OccupationProfile(
            np.array([m for m, _ in stats]), np.array([e for _, e in stats])
        )
    return OccupationProfile(occupations_of_state(source, L))


def count_peaks(profile: OccupationProfile) -> int:
    """Strict interior local maxima; the two edge sites never count."""
    v = profile.values
    if v.size < 3:
        return 0
    inner = v[1:-1]
    return int(np.sum((inner > v[:-2]) & (inner > v[2:])))
