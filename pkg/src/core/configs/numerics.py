from dataclasses import dataclass


@dataclass(slots=True)
class NumericsConfig:
    """Tolerances and sizes shared by the exact backend."""

    coeff_cutoff: float = 1e-14
    hermitian_tol: float = 1e-10
    norm_tol: float = 1e-8
    krylov_dim: int = 30
    krylov_tol: float = 1e-12
    krylov_breakdown: float = 1e-13
    ed_max_dim: int = 2**17
