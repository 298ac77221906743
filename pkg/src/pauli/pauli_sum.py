"""
PauliSum module
===============

Weighted sums of Pauli strings in canonical form.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Union

import numpy as np
import numpy.typing as npt
from scipy import sparse

from src.core.errors import DimensionMismatchError
from src.core.main_config import settings
from src.core.types.pauli_string import PauliString
from src.core.types.pauli_term import PauliTerm
from src.pauli.action import basis_indices, parity_signs
from src.pauli.algebra import PauliAlgebra

Scalar = Union[int, float, complex]


class PauliSum:
    """
    Immutable operator ``sum_k c_k P_k`` on ``n_sites`` spins.

    The canonical form merges duplicate strings and drops coefficients with
    modulus below ``settings.numerics.coeff_cutoff``; terms are ordered by
    ``PauliString.sort_key`` so equal operators compare equal.
    """

    __slots__ = ("n_sites", "_coeffs", "_terms")

    def __init__(
        self,
        n_sites: int,
        terms: Union[Mapping[PauliString, Scalar], Iterable[tuple[PauliString, Scalar]]] = (),
    ) -> None:
        self.n_sites = n_sites
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[PauliString, complex] = {}
        for string, coeff in items:
            if string.n_sites != n_sites:
                raise DimensionMismatchError(
                    f"String on {string.n_sites} sites added to a sum on {n_sites} sites"
                )
            acc[string] = acc.get(string, 0j) + complex(coeff)
        cutoff = settings.numerics.coeff_cutoff
        self._coeffs = {s: c for s, c in acc.items() if abs(c) >= cutoff}
        self._terms = tuple(
            PauliTerm(self._coeffs[s], s) for s in sorted(self._coeffs, key=PauliString.sort_key)
        )

    # ------------------------------------------------------------------ #
    # Construction
    # ------------------------------------------------------------------ #
    @classmethod
    def from_string(cls, string: PauliString, coeff: Scalar = 1.0) -> PauliSum:
        return cls(string.n_sites, [(string, coeff)])

    @classmethod
    def from_label(cls, n_sites: int, label: str, coeff: Scalar = 1.0) -> PauliSum:
        return cls.from_string(PauliString.from_label(n_sites, label), coeff)

    @classmethod
    def identity(cls, n_sites: int, coeff: Scalar = 1.0) -> PauliSum:
        return cls.from_string(PauliString.identity(n_sites), coeff)

    @classmethod
    def zero(cls, n_sites: int) -> PauliSum:
        return cls(n_sites)

    # ------------------------------------------------------------------ #
    # Queries
    # ------------------------------------------------------------------ #
    @property
    def terms(self) -> tuple[PauliTerm, ...]:
        return self._terms

    @property
    def dim(self) -> int:
        return 1 << self.n_sites

    def coefficient(self, string: PauliString) -> complex:
        return self._coeffs.get(string, 0j)

    def is_hermitian(self, tol: float | None = None) -> bool:
        """Every Pauli string is self-adjoint, so Hermitian iff all coeffs are real."""
        tol = settings.numerics.hermitian_tol if tol is None else tol
        return all(abs(t.coeff.imag) <= tol for t in self._terms)

    def is_close(self, other: PauliSum, atol: float = 1e-14) -> bool:
        """Coefficient-wise comparison."""
        if self.n_sites != other.n_sites:
            return False
        keys = set(self._coeffs) | set(other._coeffs)
        return all(abs(self.coefficient(k) - other.coefficient(k)) <= atol for k in keys)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[PauliTerm]:
        return iter(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self.n_sites == other.n_sites and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.n_sites, frozenset(self._coeffs.items())))

    # ------------------------------------------------------------------ #
    # Arithmetic
    # ------------------------------------------------------------------ #
    def _check(self, other: PauliSum) -> None:
        if self.n_sites != other.n_sites:
            raise DimensionMismatchError(
                f"Cannot combine sums on {self.n_sites} and {other.n_sites} sites"
            )

    def __add__(self, other: PauliSum) -> PauliSum:
        self._check(other)
        return PauliSum(
            self.n_sites,
            [*self._coeffs.items(), *other._coeffs.items()],
        )

    def __neg__(self) -> PauliSum:
        return self * -1.0

    def __sub__(self, other: PauliSum) -> PauliSum:
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> PauliSum:
        return PauliSum(self.n_sites, {s: c * scalar for s, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: PauliSum) -> PauliSum:
        """Operator product ``self @ other``."""
        self._check(other)
        products: list[tuple[PauliString, complex]] = []
        for a, ca in self._coeffs.items():
            for b, cb in other._coeffs.items():
                phase, string = PauliAlgebra.multiply(a, b)
                products.append((string, phase * ca * cb))
        return PauliSum(self.n_sites, products)

    def commutator(self, other: PauliSum) -> PauliSum:
        return (self @ other) - (other @ self)

    def conjugated(self, by: PauliString) -> PauliSum:
        """Return ``by @ self @ by`` (each string picks up a sign)."""
        items = []
        for string, coeff in self._coeffs.items():
            sign = 1.0 if PauliAlgebra.commutes(string, by) else -1.0
            items.append((string, sign * coeff))
        return PauliSum(self.n_sites, items)

    # ------------------------------------------------------------------ #
    # Matrix forms
    # ------------------------------------------------------------------ #
    def to_sparse(self) -> sparse.csr_matrix:
        """CSR matrix with ``M[b ^ x, b] = c i^y (-1)^{b.z}`` per term."""
        dim = self.dim
        idx = basis_indices(dim)
        rows, cols, data = [], [], []
        for term in self._terms:
            p = term.string
            values = term.coeff * PauliAlgebra.phase_factor(p) * parity_signs(idx, p.z_mask)
            rows.append(idx ^ p.x_mask)
            cols.append(idx)
            data.append(values.astype(np.complex128))
        if not data:
            return sparse.csr_matrix((dim, dim), dtype=np.complex128)
        matrix = sparse.coo_matrix(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
            shape=(dim, dim),
        )
        return matrix.tocsr()

    def to_dense(self) -> npt.NDArray[np.complex128]:
        return self.to_sparse().toarray()

    def __repr__(self) -> str:
        body = " + ".join(f"({t.coeff:.6g})*[{t.string.label}]" for t in self._terms[:6])
        more = "" if len(self._terms) <= 6 else f" + ... ({len(self._terms)} terms)"
        return f"PauliSum({self.n_sites}, {body or '0'}{more})"
