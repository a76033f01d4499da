"""The lattice Z^n, the bicharacter chi fixed by a braiding matrix, and m(e', e'')."""

from __future__ import annotations

from typing import Optional, Sequence

from .scalars import INFINITE, CycloContext, Scalar, order, solve_power

Vec = tuple[int, ...]


def unit(n: int, i: int) -> Vec:
    return tuple(1 if k == i else 0 for k in range(n))


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vscale(k: int, a: Vec) -> Vec:
    return tuple(k * x for x in a)


class Bicharacter:
    """chi on Z^n with chi(e_i, e_j) = q[i][j].

    Letters are 0-based internally.  The instance carries a private memo table
    used by the algebra layers; it only ever caches pure function values.
    """

    def __init__(self, ctx: CycloContext, q: Sequence[Sequence]):
        n = len(q)
        if n < 1 or any(len(row) != n for row in q):
            raise ValueError("braiding matrix must be square and nonempty")
        self.ctx = ctx
        self.n = n
        self.q = tuple(tuple(ctx.coerce(x) for x in row) for row in q)
        for i, row in enumerate(self.q):
            for j, x in enumerate(row):
                if x.is_zero():
                    raise ValueError(f"braiding entry q[{i + 1}][{j + 1}] is zero")
        self.qinv = tuple(tuple(x.inverse() for x in row) for row in self.q)
        self.memo: dict = {}
        self._chi: dict = {}

    def __repr__(self):
        rows = "; ".join(", ".join(str(x) for x in row) for row in self.q)
        return f"Bicharacter(N={self.ctx.N}, params={list(self.ctx.params)}, q=[{rows}])"

    def chi(self, a: Vec, b: Vec) -> Scalar:
        key = (a, b)
        hit = self._chi.get(key)
        if hit is not None:
            return hit
        r = self.ctx.one
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                k = ai * bj
                if k:
                    r = r * (self.q[i][j] ** k if k > 0 else self.qinv[i][j] ** (-k))
        self._chi[key] = r
        return r

    def p_tilde(self, a: Vec, b: Vec) -> Scalar:
        return self.chi(a, b) * self.chi(b, a)


def chi_eval(B: Bicharacter, a: Vec, b: Vec) -> Scalar:
    return B.chi(a, b)


def p_tilde(B: Bicharacter, a: Vec, b: Vec) -> Scalar:
    return B.p_tilde(a, b)


def m_value(B: Bicharacter, e1: Vec, e2: Vec) -> Optional[int]:
    """m(e1, e2), or None when no admissible m exists; m(e, e) = -2.

    The side condition chi(e1, e1) != 1 belongs to the branch chi(e1, e1)^(m+1) = 1.
    """
    if e1 == e2:
        return -2
    x = B.chi(e1, e1)
    y = B.p_tilde(e1, e2)
    d = order(x)
    if d is INFINITE:
        return solve_power(x, y.inverse())
    x_is_one = x.is_one()
    power = B.ctx.one  # x^m
    for m in range(d + 1):
        if (power * y).is_one():
            return m
        power = power * x
        if not x_is_one and power.is_one():
            return m
    return None


def is_connected(B: Bicharacter) -> bool:
    """Connectivity of the graph on letters with an edge wherever p~_ij != 1."""
    n = B.n
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j not in seen and not (B.q[i][j] * B.q[j][i]).is_one():
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def components(B: Bicharacter) -> list[list[int]]:
    n = B.n
    left = set(range(n))
    out = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in comp and not (B.q[i][j] * B.q[j][i]).is_one():
                    comp.add(j)
                    stack.append(j)
        left -= comp
        out.append(sorted(comp))
    return out
