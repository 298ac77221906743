"""
Text form of a PauliSum: one ``coeff<TAB>label`` line per term.
"""

from src.core.types.pauli_string import PauliString
from src.pauli.pauli_sum import PauliSum


class PauliSumCodec:
    """Static encoder/decoder used by CLI debug dumps."""

    @staticmethod
    def dumps(op: PauliSum) -> str:
        lines = []
        for term in op.terms:
            coeff = term.coeff
            text = repr(coeff.real) if coeff.imag == 0 else repr(coeff)
            lines.append(f"{text}\t{term.string.label}")
        return "\n".join(lines) + ("\n" if lines else "")

    @staticmethod
    def loads(n_sites: int, text: str) -> PauliSum:
        items = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                coeff_text, label = line.split("\t", 1)
                items.append((PauliString.from_label(n_sites, label), complex(coeff_text)))
            except ValueError as exc:
                raise ValueError(f"Line {lineno}: cannot parse {line!r} ({exc})") from exc
        return PauliSum(n_sites, items)
