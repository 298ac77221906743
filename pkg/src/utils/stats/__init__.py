from src.utils.stats.stats_helper import StatsHelper

__all__ = ["StatsHelper"]
