"""
Per-(walk, step) random streams.
"""

import numpy as np


class SeedHelper:
    """
    Counter-based random streams.

    Every stream is a Philox generator keyed by a ``SeedSequence`` built
    from the master seed and integer coordinates, so the numbers a walk
    draws never depend on scheduling order.
    """

    @staticmethod
    def stream(master_seed: int, *coords: int) -> np.random.Generator:
        entropy = [int(master_seed), *(int(c) for c in coords)]
        return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))

    @staticmethod
    def walk_stream(master_seed: int, walk: int, step: int) -> np.random.Generator:
        """Stream for thermal step ``step`` of walk ``walk`` (step 0 draws the start CPS)."""
        return SeedHelper.stream(master_seed, walk, step)
