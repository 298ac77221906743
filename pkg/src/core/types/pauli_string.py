"""
PauliString Type Module
"""

from __future__ import annotations

from dataclasses import dataclass

from src.utils.bits.bit_helper import BitHelper

_LETTERS = {(1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_BITS = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1), "I": (0, 0)}


@dataclass(frozen=True, slots=True)
class PauliString:
    """
    Tensor product of single-site Paulis in symplectic (bit-mask) form.

    Site ``i`` is stored at bit ``n_sites - 1 - i`` of both masks, so the masks
    line up with statevector indices (site 0 is the most significant bit).
    A site carries X if only its x bit is set, Z if only its z bit is set,
    Y if both are set and the identity if neither is.
    """

    n_sites: int
    x_mask: int = 0
    z_mask: int = 0

    def __post_init__(self) -> None:
        if self.n_sites < 1:
            raise ValueError(f"PauliString needs at least one site, got {self.n_sites}")
        limit = 1 << self.n_sites
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise ValueError(
                f"Masks exceed register width {self.n_sites}: "
                f"x={self.x_mask:#x}, z={self.z_mask:#x}"
            )

    # ------------------------------------------------------------------ #
    # Construction
    # ------------------------------------------------------------------ #
    @classmethod
    def identity(cls, n_sites: int) -> PauliString:
        return cls(n_sites)

    @classmethod
    def from_ops(cls, n_sites: int, ops: dict[int, str]) -> PauliString:
        """Build from a ``{site: letter}`` mapping, e.g. ``{0: "Y", 3: "Z"}``."""
        x_mask = z_mask = 0
        for site, letter in ops.items():
            if not 0 <= site < n_sites:
                raise ValueError(f"Site {site} outside register of {n_sites} sites")
            try:
                x_bit, z_bit = _BITS[letter.upper()]
            except KeyError:
                raise ValueError(f"Unknown Pauli letter {letter!r}") from None
            bit = BitHelper.site_bit(n_sites, site)
            if x_bit:
                x_mask |= bit
            if z_bit:
                z_mask |= bit
        return cls(n_sites, x_mask, z_mask)

    @classmethod
    def from_label(cls, n_sites: int, label: str) -> PauliString:
        """Parse a label such as ``"X0 Z2 Y5"`` (``"I"`` is the identity)."""
        ops: dict[int, str] = {}
        for token in label.split():
            if token.upper() == "I":
                continue
            letter, site = token[0], int(token[1:])
            if site in ops:
                raise ValueError(f"Site {site} repeated in label {label!r}")
            ops[site] = letter
        return cls.from_ops(n_sites, ops)

    # ------------------------------------------------------------------ #
    # Queries
    # ------------------------------------------------------------------ #
    def _bit(self, site: int) -> int:
        return BitHelper.site_bit(self.n_sites, site)

    def letter(self, site: int) -> str:
        bit = self._bit(site)
        key = (int(bool(self.x_mask & bit)), int(bool(self.z_mask & bit)))
        return _LETTERS.get(key, "I")

    @property
    def weight(self) -> int:
        """Number of sites acted on non-trivially."""
        return (self.x_mask | self.z_mask).bit_count()

    @property
    def y_count(self) -> int:
        return (self.x_mask & self.z_mask).bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(s for s in range(self.n_sites) if (self.x_mask | self.z_mask) & self._bit(s))

    @property
    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    @property
    def label(self) -> str:
        if self.is_identity:
            return "I"
        return " ".join(f"{self.letter(s)}{s}" for s in self.support)

    def sort_key(self) -> tuple[int, tuple[int, ...], str]:
        """Deterministic (weight, sites, letters) ordering used for pools."""
        sites = self.support
        return self.weight, sites, "".join(self.letter(s) for s in sites)

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"PauliString({self.n_sites}, {self.label!r})"
