"""
Collapse schedule type.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enums.basis import Basis


@dataclass(frozen=True, slots=True)
class CollapseSchedule:
    """
    Basis used at each thermal step.

    Steps count from 1: odd steps use ``basis_odd`` and even steps use
    ``basis_even``. A fixed schedule has both equal.
    """

    basis_odd: Basis
    basis_even: Basis

    @classmethod
    def fixed(cls, basis: Basis | str) -> CollapseSchedule:
        tag = Basis.parse(basis)
        return cls(tag, tag)

    @classmethod
    def alternating(cls, basis_odd: Basis | str, basis_even: Basis | str) -> CollapseSchedule:
        return cls(Basis.parse(basis_odd), Basis.parse(basis_even))

    @classmethod
    def parse(cls, tag: str) -> CollapseSchedule:
        """``"y"`` is fixed, ``"yz"`` alternates y (odd) and z (even)."""
        text = tag.strip().lower()
        if len(text) == 1:
            return cls.fixed(text)
        if len(text) == 2:
            return cls.alternating(text[0], text[1])
        raise ValueError(f"Schedule tag {tag!r} must have one or two basis letters")

    @property
    def is_fixed(self) -> bool:
        return self.basis_odd == self.basis_even

    def basis_for_step(self, step: int) -> Basis:
        if step < 1:
            raise ValueError(f"Thermal steps count from 1, got {step}")
        return self.basis_odd if step % 2 == 1 else self.basis_even

    @property
    def tag(self) -> str:
        if self.is_fixed:
            return self.basis_odd.value
        return self.basis_odd.value + self.basis_even.value

    def __str__(self) -> str:
        return self.tag
