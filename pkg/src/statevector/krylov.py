"""
Krylov-subspace imaginary-time propagation.
"""

from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt
from scipy.linalg import eigh_tridiagonal

from src.core.errors import NonConvergenceError, NonHermitianError
from src.core.main_config import settings
from src.core.types.statevector import Statevector
from src.pauli.pauli_sum import PauliSum

logger = logging.getLogger(__name__)


class KrylovPropagator:
    """
    Applies exp(-tau K) to a vector with Lanczos substeps.

    Each substep builds an orthonormal Krylov basis (full
    reorthogonalization), exponentiates the projected tridiagonal matrix
    and halves the substep until the a-posteriori residual estimate
    ``beta_m |e_m^T exp(-dt T) e_1|`` drops below the tolerance. Norms are
    accumulated in log space.
    """

    def __init__(
        self,
        generator: PauliSum,
        krylov_dim: int | None = None,
        tol: float | None = None,
    ) -> None:
        numerics = settings.numerics
        if not generator.is_hermitian():
            raise NonHermitianError("Imaginary-time generator must be Hermitian")
        matrix = generator.to_sparse()
        if not np.any(matrix.data.imag):
            matrix = matrix.real
        self._matrix = matrix.tocsr()
        self.dim = generator.dim
        self.krylov_dim = min(krylov_dim or numerics.krylov_dim, self.dim)
        self.tol = numerics.krylov_tol if tol is None else tol
        self._breakdown = numerics.krylov_breakdown

    def propagate(self, psi: Statevector, tau: float) -> tuple[Statevector, float]:
        """
        Return the normalized exp(-tau K)|psi> and log ||exp(-tau K)|psi>||^2.

        ``psi`` need not be normalized; its own norm enters the log weight.
        """
        if tau < 0:
            raise ValueError(f"Imaginary time must be >= 0, got {tau}")
        norm0 = float(np.linalg.norm(psi))
        if norm0 == 0.0:
            raise ValueError("Cannot propagate the zero vector")
        v = psi.astype(np.complex128) / norm0
        log_norm_sq = 2.0 * np.log(norm0)
        remaining = float(tau)
        substeps = 0

        while remaining > 0.0:
            basis, alpha, beta, residual = self._lanczos(v)
            dt = remaining
            while True:
                y, shift, error = self._projected_exp(alpha, beta, residual, dt)
                if error <= self.tol:
                    break
                dt *= 0.5
                if dt < 1e-10 * max(tau, 1.0):
                    raise NonConvergenceError(
                        f"Krylov substep collapsed below {dt:.3e} (error {error:.3e})"
                    )
            w = basis.T @ y
            norm = float(np.linalg.norm(w))
            log_norm_sq += 2.0 * np.log(norm) - 2.0 * dt * shift
            v = w / norm
            remaining -= dt
            substeps += 1
            if remaining < 1e-14 * max(tau, 1.0):
                remaining = 0.0

        logger.debug("Krylov propagation to tau=%.6g took %d substeps", tau, substeps)
        return v, float(log_norm_sq)

    # ------------------------------------------------------------------ #
    # Internal helpers
    # ------------------------------------------------------------------ #
    def _lanczos(
        self, v: Statevector
    ) -> tuple[npt.NDArray[np.complex128], npt.NDArray[np.float64], npt.NDArray[np.float64], float]:
        m = self.krylov_dim
        basis = np.zeros((m, self.dim), dtype=np.complex128)
        basis[0] = v
        alpha: list[float] = []
        beta: list[float] = []
        residual = 0.0
        for j in range(m):
            w = self._matrix @ basis[j]
            a = float(np.vdot(basis[j], w).real)
            alpha.append(a)
            w = w - a * basis[j]
            if j > 0:
                w = w - beta[j - 1] * basis[j - 1]
            # full reorthogonalization against the whole basis
            w = w - basis[: j + 1].T @ (basis[: j + 1].conj() @ w)
            b = float(np.linalg.norm(w))
            if b < self._breakdown:
                residual = 0.0
                return basis[: j + 1], np.array(alpha), np.array(beta), residual
            if j == m - 1:
                residual = b
                break
            beta.append(b)
            basis[j + 1] = w / b
        return basis, np.array(alpha), np.array(beta), residual

    @staticmethod
    def _projected_exp(
        alpha: npt.NDArray[np.float64],
        beta: npt.NDArray[np.float64],
        residual: float,
        dt: float,
    ) -> tuple[npt.NDArray[np.float64], float, float]:
        """exp(-dt (T - shift)) e_1 with shift = min eig(T); returns (y, shift, error)."""
        if alpha.size == 1:
            y = np.ones(1)
            shift = float(alpha[0])
        else:
            theta, vecs = eigh_tridiagonal(alpha, beta)
            shift = float(theta[0])
            y = vecs @ (np.exp(-dt * (theta - shift)) * vecs[0])
        error = residual * abs(y[-1]) / float(np.linalg.norm(y))
        return y, shift, error
