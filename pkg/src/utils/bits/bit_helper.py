"""
Bit tricks on computational-basis indices.
"""

import numpy as np
import numpy.typing as npt


class BitHelper:
    """Static helpers reading spin configurations out of basis indices."""

    @staticmethod
    def site_bit(n_sites: int, site: int) -> int:
        """Mask of ``site`` (site 0 is the most significant bit)."""
        return 1 << (n_sites - 1 - site)

    @staticmethod
    def site_values(indices: npt.NDArray[np.int64], n_sites: int, site: int) -> npt.NDArray[np.int64]:
        """Bit (0 or 1) of ``site`` for every index."""
        return (indices >> (n_sites - 1 - site)) & 1

    @staticmethod
    def domain_walls(indices: npt.NDArray[np.int64], n_sites: int) -> npt.NDArray[np.int64]:
        """
        Number of unequal neighbouring spins, i.e. the fermion number.

        Bit k of ``b ^ (b >> 1)`` compares adjacent sites; the top bit is
        masked out so only the ``n_sites - 1`` bonds are counted.
        """
        bonds = (1 << (n_sites - 1)) - 1
        return np.bitwise_count((indices ^ (indices >> 1)) & bonds).astype(np.int64)

    @staticmethod
    def occupation(indices: npt.NDArray[np.int64], n_sites: int, site: int) -> npt.NDArray[np.int64]:
        """n_i = 1 where spins ``site - 1`` and ``site`` differ."""
        left = BitHelper.site_values(indices, n_sites, site - 1)
        right = BitHelper.site_values(indices, n_sites, site)
        return left ^ right

    @staticmethod
    def to_bitstring(index: int, n_sites: int) -> str:
        return format(int(index), f"0{n_sites}b")
