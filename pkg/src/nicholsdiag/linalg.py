"""Exact sparse Gaussian elimination over the scalar field.

Vectors are dicts index -> nonzero scalar.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .scalars import Scalar

SparseVec = dict


def sparse(values: Sequence) -> SparseVec:
    return {i: x for i, x in enumerate(values) if x}


class EchelonBasis:
    """Incrementally built echelon basis; pivots are normalized to 1.

    Reducing in insertion order is valid because every stored row was itself
    reduced against the earlier rows before it was stored.
    """

    def __init__(self):
        self.rows: list[tuple[int, SparseVec]] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: SparseVec) -> SparseVec:
        v = dict(vec)
        for p, row in self.rows:
            c = v.get(p)
            if c is None:
                continue
            for k, x in row.items():
                if k in v:
                    s = v[k] - c * x
                    if s:
                        v[k] = s
                    else:
                        del v[k]
                else:
                    v[k] = -(c * x)
        return v

    def add(self, vec: SparseVec) -> bool:
        """Insert vec; True iff it was independent of the stored rows."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        self.rows.append((p, {k: x * inv for k, x in v.items()}))
        return True

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)


def rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    eb = EchelonBasis()
    for row in matrix:
        eb.add(sparse(row))
    return len(eb)


def inverse(matrix: Sequence[Sequence[Scalar]], one: Scalar) -> Optional[list[list[Scalar]]]:
    """Gauss-Jordan inverse of a square matrix, or None when singular."""
    n = len(matrix)
    zero = one - one
    a = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mat_vec(m: Sequence[Sequence[Scalar]], v: Sequence[Scalar], zero: Scalar) -> list[Scalar]:
    out = []
    for row in m:
        s = zero
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out
