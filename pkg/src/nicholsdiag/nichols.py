"""Degree-truncated Nichols algebra B(V).

Every graded component is described through the pairing with the dual words:
a homogeneous element vanishes in B(V) exactly when all its pairings vanish.
From the pairing matrix we read off the dimension (its rank), the standard
words (pivot columns, scanning from the greatest word down) and a set of dual
words whose pairings give faithful coordinates on the component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Optional

from .balgebra import Element, bracket_of_word, mul, pair_words, unit_element
from .lattice import Bicharacter, Vec, is_connected, vscale
from .linalg import EchelonBasis, inverse
from .scalars import INFINITE, Scalar, order
from .weyl import DEFAULT_CAP_STATES, GroupoidGraph, is_arithmetic_root_system
from .words import Word, is_lyndon, lyndon_factorization, lyndon_of_multidegree, words_of_multidegree

DEFAULT_MAX_DEGREE = 8


def multidegrees(n: int, total: int) -> list[Vec]:
    """All mu in N^n with |mu| = total, in descending lexicographic order."""
    if n == 1:
        return [(total,)]
    out = []
    for k in range(total, -1, -1):
        for rest in multidegrees(n - 1, total - k):
            out.append((k,) + rest)
    return out


def below(mu: Vec) -> list[Vec]:
    """All nu <= mu componentwise, ordered by total degree."""
    return sorted(product(*(range(k + 1) for k in mu)), key=lambda v: (sum(v), v))


@dataclass
class GradedComponent:
    B: Bicharacter = field(repr=False)
    multidegree: Vec
    words: list[Word]  # descending
    standard: list[Word]  # descending
    row_words: list[Word]  # dual words giving faithful coordinates
    _inv: list = field(repr=False, default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.standard)

    @cached_property
    def row_order(self) -> list[Word]:
        """Dual words indexing the rows of the full pairing matrix (ascending)."""
        return self.words[::-1]

    @cached_property
    def gram(self) -> list[list[Scalar]]:
        """gram[r][c] = <y_{row_order[r]}, x_{words[c]}>."""
        return [[pair_words(self.B, v, w) for w in self.words] for v in self.row_order]

    def coords(self, u: Element) -> list[Scalar]:
        B = self.B
        out = []
        for v in self.row_words:
            s = B.ctx.zero
            for w, c in u.terms.items():
                p = pair_words(B, v, w)
                if p:
                    s = s + c * p
            out.append(s)
        return out

    def is_zero(self, u: Element) -> bool:
        return not any(self.coords(u))

    def normal_form(self, u: Element) -> Element:
        """The unique combination of standard words equal to u in B(V)."""
        c = self.coords(u)
        terms = {}
        for s, row in zip(self.standard, self._inv):
            a = self.B.ctx.zero
            for x, y in zip(row, c):
                if x and y:
                    a = a + x * y
            if a:
                terms[s] = a
        return Element(terms)


def graded_component(B: Bicharacter, mu: Vec, pruned: bool = True) -> GradedComponent:
    """Words, rank, standard words and coordinates of B(V) in multidegree mu.

    With ``pruned`` only words whose Lyndon factors are standard Lyndon words of
    lower degree (or that are Lyndon themselves) are tested: every other word has a
    non-standard factor and so is already a combination of greater words.
    """
    mu = tuple(mu)
    if any(k < 0 for k in mu):
        raise ValueError("multidegree must be nonnegative")
    key = ("component", mu, pruned)
    hit = B.memo.get(key)
    if hit is not None:
        return hit
    words = words_of_multidegree(mu)[::-1]
    rows = words[::-1]
    if sum(mu) == 0:
        comp = GradedComponent(B, mu, [()], [()], [()], [[B.ctx.one]])
        B.memo[key] = comp
        return comp
    if pruned and sum(mu) > 1:
        ok: dict[Word, bool] = {}

        def standard_lyndon(f: Word) -> bool:
            if f not in ok:
                d = tuple(f.count(a) for a in range(B.n))
                ok[f] = f in graded_component(B, d, True).standard
            return ok[f]

        candidates = []
        for w in words:
            fs = lyndon_factorization(w)
            if len(fs) == 1 or all(standard_lyndon(f) for f in fs):
                candidates.append(w)
    else:
        candidates = words
    eb = EchelonBasis()
    standard = []
    columns = []
    for w in candidates:
        col = {}
        for r, v in enumerate(rows):
            p = pair_words(B, v, w)
            if p:
                col[r] = p
        if eb.add(col):
            standard.append(w)
            columns.append(col)
    # dual words whose rows are independent on the standard columns
    reb = EchelonBasis()
    row_words = []
    for r, v in enumerate(rows):
        if len(row_words) == len(standard):
            break
        vec = {c: col[r] for c, col in enumerate(columns) if r in col}
        if reb.add(vec):
            row_words.append(v)
    square = [[pair_words(B, v, s) for s in standard] for v in row_words]
    inv = inverse(square, B.ctx.one) if standard else []
    comp = GradedComponent(B, mu, words, standard, row_words, inv or [])
    B.memo[key] = comp
    return comp


def component_of(B: Bicharacter, u: Element) -> GradedComponent:
    return graded_component(B, u.multidegree(B.n))


def full_coords(B: Bicharacter, u: Element, mu: Vec) -> dict:
    """Pairings of u against every dual word of multidegree mu (sparse)."""
    out = {}
    for r, v in enumerate(words_of_multidegree(mu)):
        s = B.ctx.zero
        for w, c in u.terms.items():
            p = pair_words(B, v, w)
            if p:
                s = s + c * p
        if s:
            out[r] = s
    return out


# ---------------------------------------------------------------------------
# roots and hard super-letters


@dataclass
class RootDatum:
    root: Vec
    lyndon: Word
    p_uu: Scalar
    ord_puu: object  # int or INFINITE
    height: object = None  # int, INFINITE, or None when unchecked
    flag: Optional[str] = None

    @property
    def degree(self) -> int:
        return sum(self.root)


def hard_super_letters(B: Bicharacter, D: int) -> list[RootDatum]:
    """Standard Lyndon words of length <= D; one root datum each."""
    if D < 1:
        raise ValueError("degree cap must be at least 1")
    out = []
    for d in range(1, D + 1):
        for mu in multidegrees(B.n, d):
            comp = graded_component(B, mu)
            for w in comp.standard:
                if is_lyndon(w):
                    p = B.chi(mu, mu)
                    out.append(RootDatum(mu, w, p, order(p)))
    out.sort(key=lambda r: (r.degree, r.lyndon))
    return out


def _lyndon_below(B: Bicharacter, target: Vec, greater_than: Word) -> list[Word]:
    out = []
    for nu in below(target):
        if sum(nu) == 0:
            continue
        out.extend(w for w in lyndon_of_multidegree(nu) if w > greater_than)
    return out


def greater_superword_span(B: Bicharacter, u: Word, target: Vec) -> list[Element]:
    """Basis (in B(V)) of the span of products of super-letters [v], v > u Lyndon,
    of multidegree ``target``.  Coordinates use every dual word, so this does not
    depend on the standard-word computation."""
    letters = [(v, tuple(v.count(a) for a in range(B.n))) for v in _lyndon_below(B, target, u)]
    spans: dict[Vec, list[Element]] = {}
    for nu in below(target):
        if sum(nu) == 0:
            spans[nu] = [unit_element(B)]
            continue
        eb = EchelonBasis()
        basis = []
        for v, dv in letters:
            rest = tuple(a - b for a, b in zip(nu, dv))
            if min(rest) < 0:
                continue
            for s in spans[rest]:
                e = mul(bracket_of_word(B, v), s)
                if eb.add(full_coords(B, e, nu)):
                    basis.append(e)
        spans[nu] = basis
    return spans[tuple(target)]


def in_greater_span(B: Bicharacter, elem: Element, u: Word, target: Vec) -> bool:
    eb = EchelonBasis()
    for e in greater_superword_span(B, u, target):
        eb.add(full_coords(B, e, target))
    return eb.contains(full_coords(B, elem, target))


def is_hard_oracle(B: Bicharacter, u: Word) -> bool:
    """[u] is hard: not a combination of super-words of the same degree in greater super-letters."""
    mu = tuple(u.count(a) for a in range(B.n))
    return not in_greater_span(B, bracket_of_word(B, u), u, mu)


def hard_lyndon_oracle(B: Bicharacter, D: int) -> list[Word]:
    out = []
    for d in range(1, D + 1):
        for mu in multidegrees(B.n, d):
            out.extend(w for w in lyndon_of_multidegree(mu) if is_hard_oracle(B, w))
    return sorted(out, key=lambda w: (len(w), w))


def check_heights(B: Bicharacter, roots: list[RootDatum], D: int) -> list[RootDatum]:
    """Certify heights: [u]^t must reduce to greater super-words, t = ord(p_uu).

    Sets height = t on success, INFINITE (flag "m-infinity") on failure, and leaves
    None when t * |u| > D.  Roots with p_uu = 1 are flagged.
    """
    out = []
    for r in roots:
        r = RootDatum(r.root, r.lyndon, r.p_uu, r.ord_puu)
        t = r.ord_puu
        if t is INFINITE:
            r.height = INFINITE
        elif t == 1:
            r.height = INFINITE
            r.flag = "p_uu = 1"
        elif t * r.degree <= D:
            power = unit_element(B)
            letter_elem = bracket_of_word(B, r.lyndon)
            for _ in range(t):
                power = mul(power, letter_elem)
            if in_greater_span(B, power, r.lyndon, vscale(t, r.root)):
                r.height = t
            else:
                r.height = INFINITE
                r.flag = "m-infinity"
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# Hilbert series and PBW counts


@dataclass
class HilbertSeries:
    coefficients: list[int]

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def __getitem__(self, d: int) -> int:
        return self.coefficients[d]


def hilbert(B: Bicharacter, D: int) -> HilbertSeries:
    coeffs = [1]
    for d in range(1, D + 1):
        coeffs.append(sum(graded_component(B, mu).rank for mu in multidegrees(B.n, d)))
    return HilbertSeries(coeffs)


def pbw_series(roots: list[tuple[int, object]], D: int) -> list[int]:
    """Count restricted PBW monomials by total degree: factors (degree, height)."""
    series = [1] + [0] * D
    for deg, h in roots:
        new = [0] * (D + 1)
        for d, c in enumerate(series):
            if not c:
                continue
            k = 0
            while d + k * deg <= D and (h is INFINITE or h is None or k < h):
                new[d + k * deg] += c
                k += 1
        series = new
    return series


def expand_product(factors: list[list[int]], D: int) -> list[int]:
    out = [1] + [0] * D
    for f in factors:
        new = [0] * (D + 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                if a and b and i + j <= D:
                    new[i + j] += a * b
        out = new
    return out


# ---------------------------------------------------------------------------
# finiteness


@dataclass
class Verdict:
    status: str  # "finite", "infinite" or "unknown"
    dim: Optional[int] = None

    def __str__(self):
        if self.status == "finite":
            return str(self.dim) if self.dim is not None else "finite"
        return self.status


@dataclass
class FinitenessReport:
    rank: int
    connected: bool
    max_degree: int
    cap_states: int
    arithmetic: str  # "yes", "no", "unknown", or "n/a" for rank one
    groupoid: Optional[GroupoidGraph]
    roots: list[RootDatum]
    roots_complete: bool
    order_checks: dict[str, object]
    dim_B: Verdict
    dim_L: Verdict
    dim_L_minus: Verdict
    route: str
    notes: list[str] = field(default_factory=list)

    @property
    def top_degree(self) -> Optional[int]:
        if self.dim_B.status != "finite" or not self.roots_complete:
            return None
        return sum((r.ord_puu - 1) * r.degree for r in self.roots)


class DisconnectedError(ValueError):
    pass


def decide_finiteness(B: Bicharacter, max_degree: int = DEFAULT_MAX_DEGREE, cap_states: int = DEFAULT_CAP_STATES) -> FinitenessReport:
    if max_degree < 1 or cap_states < 1:
        raise ValueError("caps must be positive")
    if not is_connected(B):
        raise DisconnectedError(
            "the braiding diagram is disconnected; split it into connected components "
            "and analyze each one separately"
        )
    if B.n == 1:
        return _decide_rank_one(B, max_degree, cap_states)

    verdict = is_arithmetic_root_system(B, cap=cap_states)
    G = verdict.graph
    orders = {}
    for i in range(B.n):
        orders[f"ord(p{i + 1}{i + 1})"] = order(B.q[i][i])
    for i in range(B.n):
        for j in range(i + 1, B.n):
            orders[f"ord(p{i + 1}{j + 1}p{j + 1}{i + 1})"] = order(B.q[i][j] * B.q[j][i])

    def report(arith, roots, complete, b, l, lm, route, notes=()):
        return FinitenessReport(B.n, True, max_degree, cap_states, arith, G, roots, complete,
                                orders, b, l, lm, route, list(notes))

    if verdict.status == "unknown":
        unk = Verdict("unknown")
        roots = hard_super_letters(B, max_degree)
        return report("unknown", roots, False, unk, unk, unk,
                      "groupoid cap exhausted before closure; arithmeticity undecided")
    if verdict.status == "no":
        inf = Verdict("infinite")
        roots = hard_super_letters(B, max_degree)
        return report("no", roots, False, inf, inf, inf,
                      "not an arithmetic root system (groupoid not full)")

    positive = G.positive_roots
    top_root = max(sum(v) for v in positive)
    if any(o is INFINITE for o in orders.values()):
        inf = Verdict("infinite")
        roots = hard_super_letters(B, min(top_root, max_degree))
        roots = check_heights(B, roots, max_degree)
        return report("yes", roots, top_root <= max_degree, inf, inf, inf,
                      "arithmetic root system with a quantum number of infinite order")

    if top_root > max_degree:
        roots = check_heights(B, hard_super_letters(B, max_degree), max_degree)
        unk = Verdict("unknown")
        return report("yes", roots, False, unk, Verdict("finite"), Verdict("finite"),
                      "arithmetic root system with finite orders; roots exceed the degree cap",
                      [f"largest root degree {top_root} > max_degree {max_degree}"])

    roots = check_heights(B, hard_super_letters(B, top_root), max_degree)
    notes = []
    found = sorted(r.root for r in roots)
    if found != sorted(positive):
        notes.append("hard super-letter degrees differ from the groupoid's positive roots")
    bad = [r for r in roots if r.flag]
    if bad or notes:
        notes.extend(f"root {r.root}: {r.flag}" for r in bad)
        unk = Verdict("unknown")
        return report("yes", roots, True, unk, unk, unk, "inconsistent root data", notes)
    dim = math.prod(r.ord_puu for r in roots)
    return report("yes", roots, True, Verdict("finite", dim), Verdict("finite"), Verdict("finite"),
                  "arithmetic root system, all ord(p_ii), ord(p_ij p_ji) finite")


def _decide_rank_one(B: Bicharacter, max_degree: int, cap_states: int) -> FinitenessReport:
    q = B.q[0][0]
    t = order(q)
    G = is_arithmetic_root_system(B, cap=cap_states).graph
    roots = check_heights(B, hard_super_letters(B, 1), max_degree)
    orders = {"ord(p11)": t}
    base = dict(rank=1, connected=True, max_degree=max_degree, cap_states=cap_states, arithmetic="yes",
                groupoid=G, roots=roots, roots_complete=True, order_checks=orders)
    if t is INFINITE:
        return FinitenessReport(**base, dim_B=Verdict("infinite"), dim_L=Verdict("infinite"),
                                dim_L_minus=Verdict("finite", 1),
                                route="rank one, ord(p11) infinite: B and L infinite, L^- = span(x1)")
    if t == 1:
        return FinitenessReport(**base, dim_B=Verdict("infinite"), dim_L=Verdict("finite", 1),
                                dim_L_minus=Verdict("finite", 1),
                                route="rank one, p11 = 1: polynomial algebra, L = L^- = span(x1)")
    return FinitenessReport(**base, dim_B=Verdict("finite", t), dim_L=Verdict("finite"),
                            dim_L_minus=Verdict("finite", 1),
                            route="rank one, ord(p11) finite: x1^t = 0")
