"""
Operator pools for adaptive ansatz growth.
"""

from itertools import combinations, permutations

from src.core.types.enums.basis import Basis
from src.core.types.operator_pool import OperatorPool
from src.core.types.pauli_string import PauliString


class PoolBuilder:
    """
    Builds the generator pool matched to the basis of the starting CPS.

    z: {Y_i} + {Y_i Z_j}
    x: z pool + {Y_i X_j} + {Y_i Z_j X_k}
    y: {Z_i, X_i} + {Z_i X_j} + {Z_i Z_j Z_k, i < j < k}

    Pairs and the x-pool triples run over ordered, pairwise distinct sites.
    """

    @staticmethod
    def build_pool(basis_tag: Basis | str, L: int) -> OperatorPool:
        if L < 2:
            raise ValueError(f"The chain needs L >= 2 fermion sites, got L={L}")
        basis = Basis.parse(basis_tag)
        n = L + 1
        sites = range(n)
        ops: list[dict[int, str]] = []

        if basis in (Basis.Z, Basis.X):
            ops += [{i: "Y"} for i in sites]
            ops += [{i: "Y", j: "Z"} for i, j in permutations(sites, 2)]
        if basis == Basis.X:
            ops += [{i: "Y", j: "X"} for i, j in permutations(sites, 2)]
            ops += [{i: "Y", j: "Z", k: "X"} for i, j, k in permutations(sites, 3)]
        if basis == Basis.Y:
            ops += [{i: "Z"} for i in sites]
            ops += [{i: "X"} for i in sites]
            ops += [{i: "Z", j: "X"} for i, j in permutations(sites, 2)]
            ops += [{i: "Z", j: "Z", k: "Z"} for i, j, k in combinations(sites, 3)]

        generators = sorted(
            (PauliString.from_ops(n, o) for o in ops), key=PauliString.sort_key
        )
        return OperatorPool(basis, tuple(generators))
