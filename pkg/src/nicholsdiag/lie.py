"""Nichols braided Lie algebra L(V) and Nichols Lie algebra L^-(V), truncated by degree."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .balgebra import BRAIDED, MINUS, Element, bracket, letter, mul, pairing
from .lattice import Bicharacter, Vec
from .linalg import EchelonBasis, sparse
from .nichols import graded_component, multidegrees
from .scalars import INFINITE, order, q_factorial


def iterated_bracket(B: Bicharacter, i: int, j: int, m: int) -> Element:
    """l_i^m[j]^-: x_j for m = 0, then x_i * prev - prev * x_i."""
    if i == j:
        raise ValueError("iterated bracket needs distinct letters")
    if m < 0:
        raise ValueError("m must be nonnegative")
    xi = letter(B, i)
    cur = letter(B, j)
    for _ in range(m):
        cur = bracket(B, MINUS, cur, xi)
    return cur


@dataclass
class BracketPairingRow:
    m: int
    y_i_power: bool  # <y_i^m, l^m> = (1-b)^m (m)_a! x_j
    y_j_y_i_power: bool  # <y_j y_i^m, l^m> = (1-b)^m (m)_a!
    recursion: dict[int, bool]  # k -> one step of the y_i^k recursion holds

    @property
    def ok(self) -> bool:
        return self.y_i_power and self.y_j_y_i_power and all(self.recursion.values())


def bracket_pairing_checks(B: Bicharacter, i: int, j: int, m_max: int) -> list[BracketPairingRow]:
    """Evaluate both sides of the y_i^k pairing formulas, a = p_ii^-1, b = p_ij^-1."""
    if i == j or m_max < 1:
        raise ValueError("need i != j and m_max >= 1")
    a = B.qinv[i][i]
    b = B.qinv[i][j]
    xi, xj = letter(B, i), letter(B, j)
    rows = []
    prev = iterated_bracket(B, i, j, 0)
    for m in range(1, m_max + 1):
        cur = iterated_bracket(B, i, j, m)
        coeff = (1 - b) ** m * q_factorial(m, a)
        lhs2 = pairing(B, (i,) * m, cur)
        eq2 = lhs2 == xj.scale(coeff)
        lhs3 = pairing(B, (j,) + (i,) * m, cur)
        eq3 = lhs3 == Element({(): coeff})
        rec = {}
        for k in range(1, m + 1):
            lhs = pairing(B, (i,) * k, cur)
            s = B.ctx.zero
            for l in range(k):
                s = s + a**l - a ** (m - 1 - l) * b
            inner = pairing(B, (i,) * k, prev)
            rhs = (
                pairing(B, (i,) * (k - 1), prev).scale(s)
                + mul(xi, inner).scale(a**k)
                - mul(inner, xi)
            )
            rec[k] = lhs == rhs
        rows.append(BracketPairingRow(m, eq2, eq3, rec))
        prev = cur
    return rows


@dataclass
class LieSpan:
    kind: str
    max_degree: int
    by_degree: dict[int, list[Element]] = field(default_factory=dict)
    by_multidegree: dict[Vec, list[Element]] = field(default_factory=dict)
    # True when every bracket was evaluated, or B(V) vanishes in some degree <= max_degree
    saturated: bool = False

    @property
    def dims(self) -> dict[int, int]:
        return {d: len(v) for d, v in sorted(self.by_degree.items())}

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def dims_list(self) -> list[int]:
        return [len(self.by_degree.get(d, [])) for d in range(1, self.max_degree + 1)]


def lie_dims(B: Bicharacter, kind: str, D: int) -> LieSpan:
    """Closure of {x_1..x_n} under the bracket, inside B(V), up to total degree D.

    Each new bracket is reduced to its normal form in B(V) and kept only if it is
    independent of the span already found in its multidegree.
    """
    if D < 1:
        raise ValueError("degree cap must be at least 1")
    if kind not in (BRAIDED, MINUS):
        raise ValueError(f"unknown bracket kind {kind!r}")
    span = LieSpan(kind, D)
    echelons: dict[Vec, EchelonBasis] = {}
    basis: list[tuple[Element, Vec]] = []

    def offer(e: Element, mu: Vec) -> None:
        comp = graded_component(B, mu)
        if not comp.rank:
            return
        vec = sparse(comp.coords(e))
        if not vec:
            return
        eb = echelons.setdefault(mu, EchelonBasis())
        if eb.add(vec):
            nf = comp.normal_form(e)
            basis.append((nf, mu))
            span.by_multidegree.setdefault(mu, []).append(nf)
            span.by_degree.setdefault(sum(mu), []).append(nf)

    for i in range(B.n):
        mu = tuple(1 if k == i else 0 for k in range(B.n))
        offer(letter(B, i), mu)
    skipped = False
    idx = 0
    while idx < len(basis):
        e, de = basis[idx]
        for jdx in range(idx + 1):
            f, df = basis[jdx]
            mu = tuple(x + y for x, y in zip(de, df))
            if sum(mu) > D:
                skipped = True
                continue
            offer(bracket(B, kind, e, f), mu)
            if jdx != idx:
                offer(bracket(B, kind, f, e), mu)
        idx += 1
    span.saturated = not skipped or any(
        all(graded_component(B, mu).rank == 0 for mu in multidegrees(B.n, d)) for d in range(1, D + 1)
    )
    return span


@dataclass
class Witness:
    i: int
    j: int
    reason: str


def infinite_witness(B: Bicharacter) -> Optional[Witness]:
    """First (i, j) with (b != 1 or c != 1) and ord(a) in {1, infinite}."""
    if B.n < 2:
        raise ValueError("witness scan needs rank >= 2")
    for i in range(B.n):
        for j in range(B.n):
            if i == j:
                continue
            a, b, c = B.qinv[i][i], B.qinv[i][j], B.qinv[j][i]
            if (not b.is_one() or not c.is_one()) and order(a) in (1, INFINITE):
                which = "1" if order(a) == 1 else "infinite"
                return Witness(i, j, f"p_{i + 1}{j + 1} or p_{j + 1}{i + 1} != 1 and ord(p_{i + 1}{i + 1}^-1) = {which}: "
                                     f"the iterated brackets l_{i + 1}^m[{j + 1}]^- never vanish, so L^-(V) is infinite-dimensional")
    return None
