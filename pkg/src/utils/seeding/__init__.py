from src.utils.seeding.seed_helper import SeedHelper

__all__ = ["SeedHelper"]
