"""A full-rank signed pairing on chord diagrams.

Entries vanish exactly on non-stackable pairs.  Off-diagonal stackable
entries are +1.  The diagonal signs are chosen one row at a time, so that
after eliminating with the earlier rows the new pivot is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import ChordDiagram, enumerate_diagrams, stack
from .linalg import rank_rational

MAX_CHORDS = 6


@dataclass(frozen=True)
class SignedPairingMatrix:
    n: int
    diagrams: tuple[ChordDiagram, ...]
    matrix: tuple[tuple[int, ...], ...]
    rank: int

    @property
    def size(self) -> int:
        return len(self.diagrams)

    def zero_pattern_matches_stack(self) -> bool:
        return all((self.matrix[i][j] != 0) == stack(a, b)
                   for i, a in enumerate(self.diagrams)
                   for j, b in enumerate(self.diagrams))

    def to_json(self) -> dict:
        return {"n": self.n, "rank": self.rank,
                "diagrams": [d.to_json() for d in self.diagrams],
                "matrix": [list(r) for r in self.matrix]}


def construct_full_rank_pairing(n: int) -> SignedPairingMatrix:
    """n is the number of chords; the matrix is indexed by all n-chord diagrams."""
    if not 1 <= n <= MAX_CHORDS:
        raise ValueError(f"chord count must lie in 1..{MAX_CHORDS}")
    ds = enumerate_diagrams(n)
    size = len(ds)
    g = [[(1 if stack(a, b) else 0) for b in ds] for a in ds]
    reduced: list[list[Fraction]] = []
    for i in range(size):
        row = [Fraction(v) for v in g[i]]
        row[i] = Fraction(0)
        for k, prev in enumerate(reduced):
            if row[k]:
                f = row[k] / prev[k]
                row = [a - f * b for a, b in zip(row, prev)]
        # the diagonal entry only enters through column i, unchanged by elimination
        sign = 1 if row[i] != -1 else -1
        g[i][i] = sign
        row[i] += sign
        if row[i] == 0:
            raise AssertionError("greedy sign choice failed")
        reduced.append(row)
    matrix = tuple(tuple(r) for r in g)
    return SignedPairingMatrix(n, ds, matrix, rank_rational(matrix))
