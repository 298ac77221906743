"""
Pauli-string group algebra on symplectic masks.
"""

from src.core.errors import DimensionMismatchError
from src.core.types.pauli_string import PauliString

# i**k for k mod 4
_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)


class PauliAlgebra:
    """Static helpers for products and weights of Pauli strings."""

    @staticmethod
    def multiply(a: PauliString, b: PauliString) -> tuple[complex, PauliString]:
        """
        Group product ``a * b`` as ``(phase, string)``.

        Writing P = i^{|x&z|} X^x Z^z, the product picks up
        i^{y_a + y_b - y_ab} (-1)^{|z_a & x_b|} from reordering Z_a past X_b.

        Raises:
            DimensionMismatchError: if the strings live on different registers.
        """
        if a.n_sites != b.n_sites:
            raise DimensionMismatchError(
                f"Cannot multiply strings on {a.n_sites} and {b.n_sites} sites"
            )
        product = PauliString(a.n_sites, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask)
        k = a.y_count + b.y_count - product.y_count + 2 * (a.z_mask & b.x_mask).bit_count()
        return _I_POWERS[k % 4], product

    @staticmethod
    def weight(p: PauliString) -> int:
        return p.weight

    @staticmethod
    def commutes(a: PauliString, b: PauliString) -> bool:
        """Strings commute iff their symplectic product is even."""
        if a.n_sites != b.n_sites:
            raise DimensionMismatchError(
                f"Cannot compare strings on {a.n_sites} and {b.n_sites} sites"
            )
        parity = (a.x_mask & b.z_mask).bit_count() + (a.z_mask & b.x_mask).bit_count()
        return parity % 2 == 0

    @staticmethod
    def phase_factor(p: PauliString) -> complex:
        """The i^{|x&z|} prefactor turning X^x Z^z into ``p``."""
        return _I_POWERS[p.y_count % 4]
