"""Utility modules."""

from src.utils.bits.bit_helper import BitHelper
from src.utils.seeding.seed_helper import SeedHelper
from src.utils.stats.stats_helper import StatsHelper

__all__ = ["BitHelper", "SeedHelper", "StatsHelper"]
