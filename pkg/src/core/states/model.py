from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class ModelParams:
    """
    Parameters of the Z2 gauge-theory spin chain.

    Attributes:
        L:  Number of fermion sites; the register holds L+1 spins (0..L).
        h:  Confining field strength.
        mu: Chemical potential.
    """

    L: int
    h: float = 0.0
    mu: float = 0.0

    def __post_init__(self) -> None:
        if self.L < 2:
            raise ValueError(f"The chain needs L >= 2 fermion sites, got L={self.L}")

    @property
    def n_sites(self) -> int:
        return self.L + 1
