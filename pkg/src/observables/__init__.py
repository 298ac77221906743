"""Physics outputs of states and METTS ensembles."""

from src.observables.bitstrings import run_lengths, sample_bitstrings, string_histogram
from src.observables.densities import ENERGY, NUMBER, energy_density, particle_density
from src.observables.occupations import (
    count_peaks,
    occupations_of_state,
    site_key,
    site_occupations,
)

__all__ = [
    "ENERGY",
    "NUMBER",
    "count_peaks",
    "energy_density",
    "occupations_of_state",
    "particle_density",
    "run_lengths",
    "sample_bitstrings",
    "site_key",
    "site_occupations",
    "string_histogram",
]
