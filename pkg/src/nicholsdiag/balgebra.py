"""The free braided algebra on x_1..x_n with diagonal braiding.

Elements are sparse maps word -> scalar.  Everything that depends on the
braiding takes the :class:`~nicholsdiag.lattice.Bicharacter` first.

Conventions:

* g_i^{-1}.u = chi(e_i, deg u)^{-1} u, so g_i^{-1}.x_j = p_ij^{-1} x_j.
* <y_i, uv> = <y_i, u> v + g_i^{-1}.u <y_i, v>, <y_i, x_j> = delta_ij.
* <y_{i1} ... y_{ik}, u> = <y_{i1}, <y_{i2}, ... <y_{ik}, u>>>: the rightmost
  letter acts first.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .lattice import Bicharacter, Vec
from .scalars import Scalar
from .words import Word, is_lyndon, lyndon_factorization, shirshov_decompose

BRAIDED = "braided"
MINUS = "minus"


class Element:
    """Finite linear combination of words; zero coefficients are never stored."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Scalar] = {}
        for w, c in items:
            w = tuple(w)
            if w in acc:
                acc[w] = acc[w] + c
            else:
                acc[w] = c
        self.terms = {w: c for w, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Element:
        e = cls.__new__(cls)
        e.terms = terms
        e._hash = None
        return e

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: Element) -> Element:
        r = dict(self.terms)
        for w, c in other.terms.items():
            if w in r:
                s = r[w] + c
                if s:
                    r[w] = s
                else:
                    del r[w]
            else:
                r[w] = c
        return Element._raw(r)

    def __neg__(self) -> Element:
        return Element._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: Element) -> Element:
        r = dict(self.terms)
        for w, c in other.terms.items():
            if w in r:
                s = r[w] - c
                if s:
                    r[w] = s
                else:
                    del r[w]
            else:
                r[w] = -c
        return Element._raw(r)

    def scale(self, c) -> Element:
        if not c:
            return Element._raw({})
        return Element._raw({w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def degrees(self, n: int) -> set[Vec]:
        out = set()
        for w in self.terms:
            d = [0] * n
            for a in w:
                d[a] += 1
            out.add(tuple(d))
        return out

    def multidegree(self, n: int) -> Vec:
        """The common multidegree of a nonzero homogeneous element."""
        degs = self.degrees(n)
        if len(degs) != 1:
            raise ValueError("element is not homogeneous" if degs else "zero element has no degree")
        return next(iter(degs))

    def homogeneous_parts(self, n: int) -> dict[Vec, Element]:
        parts: dict[Vec, dict] = {}
        for w, c in self.terms.items():
            d = [0] * n
            for a in w:
                d[a] += 1
            parts.setdefault(tuple(d), {})[w] = c
        return {d: Element._raw(t) for d, t in parts.items()}

    def coefficient(self, w: Word):
        return self.terms.get(tuple(w))

    def format(self) -> str:
        from .words import format_word

        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            cs = str(c)
            if cs == "1":
                parts.append(format_word(w))
            elif cs == "-1":
                parts.append("-" + format_word(w))
            else:
                parts.append(f"({cs})*{format_word(w)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Element({self.format()})"


def word_element(B: Bicharacter, w: Word, coeff=None) -> Element:
    return Element._raw({tuple(w): B.ctx.one if coeff is None else B.ctx.coerce(coeff)})


def letter(B: Bicharacter, i: int) -> Element:
    return word_element(B, (i,))


def unit_element(B: Bicharacter) -> Element:
    return word_element(B, ())


def mul(u: Element, v: Element) -> Element:
    """Bilinear extension of concatenation."""
    r: dict[Word, Scalar] = {}
    for w1, c1 in u.terms.items():
        for w2, c2 in v.terms.items():
            w = w1 + w2
            t = c1 * c2
            if w in r:
                r[w] = r[w] + t
            else:
                r[w] = t
    return Element._raw({w: c for w, c in r.items() if c})


def grouplike_act_inv(B: Bicharacter, i: int, u: Element) -> Element:
    row = B.qinv[i]
    out = {}
    for w, c in u.terms.items():
        for a in w:
            c = c * row[a]
        out[w] = c
    return Element._raw(out)


def derive(B: Bicharacter, i: int, u: Element) -> Element:
    """<y_i, u>: unfolds to sum over occurrences of x_i, weighted by the letters before it."""
    row = B.qinv[i]
    r: dict[Word, Scalar] = {}
    for w, c in u.terms.items():
        coef = c
        for k, a in enumerate(w):
            if a == i:
                rest = w[:k] + w[k + 1:]
                if rest in r:
                    r[rest] = r[rest] + coef
                else:
                    r[rest] = coef
            coef = coef * row[a]
    return Element._raw({w: c for w, c in r.items() if c})


def pairing(B: Bicharacter, yw: Word, u: Element) -> Element:
    for i in reversed(yw):
        u = derive(B, i, u)
        if not u:
            break
    return u


def pair_words(B: Bicharacter, v: Word, w: Word) -> Scalar:
    """The scalar <y_v, x_w> for words of equal multidegree (zero otherwise)."""
    memo = B.memo.setdefault("pair", {})
    key = (v, w)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if len(v) != len(w):
        val = B.ctx.zero
    elif not v:
        val = B.ctx.one
    else:
        i = v[-1]
        row = B.qinv[i]
        head = v[:-1]
        val = B.ctx.zero
        coef = None
        for k, a in enumerate(w):
            if a == i:
                sub = pair_words(B, head, w[:k] + w[k + 1:])
                if sub:
                    val = val + (sub if coef is None else coef * sub)
            coef = row[a] if coef is None else coef * row[a]
    memo[key] = val
    return val


def pair_element(B: Bicharacter, v: Word, u: Element) -> Scalar:
    """<y_v, u> as a scalar, only the words of u of length |v| contribute."""
    total = B.ctx.zero
    n = len(v)
    for w, c in u.terms.items():
        if len(w) == n and sorted(w) == sorted(v):
            p = pair_words(B, v, w)
            if p:
                total = total + c * p
    return total


def is_zero_nichols(B: Bicharacter, u: Element) -> bool:
    """u = 0 in B(V), via: u = 0 iff <y_i, u> = 0 for every i (u of positive degree)."""
    if () in u.terms:
        raise ValueError("element has a degree-0 component; test its coefficient directly")
    return _zero_rec(B, u)


def _zero_rec(B: Bicharacter, u: Element) -> bool:
    if not u.terms:
        return True
    memo = B.memo.setdefault("zero", {})
    key = u
    hit = memo.get(key)
    if hit is not None:
        return hit
    result = True
    for i in range(B.n):
        d = derive(B, i, u)
        c = d.terms.pop((), None)
        if c is not None:
            result = False
            break
        d._hash = None
        if not _zero_rec(B, d):
            result = False
            break
    memo[key] = result
    return result


def bracket(B: Bicharacter, kind: str, x: Element, y: Element) -> Element:
    """braided: yx - p_{yx} xy;  minus: yx - xy."""
    if kind == MINUS:
        return mul(y, x) - mul(x, y)
    if kind != BRAIDED:
        raise ValueError(f"unknown bracket kind {kind!r}")
    if not x or not y:
        return Element._raw({})
    p = B.chi(y.multidegree(B.n), x.multidegree(B.n))
    return mul(y, x) - mul(x, y).scale(p)


def bracket_of_word(B: Bicharacter, u: Word) -> Element:
    """The nonassociative word [u]: letters, Shirshov recursion, then left-nested factors."""
    u = tuple(u)
    if not u:
        return unit_element(B)
    memo = B.memo.setdefault("bracket_word", {})
    hit = memo.get(u)
    if hit is not None:
        return hit
    if len(u) == 1:
        val = letter(B, u[0])
    elif is_lyndon(u):
        v, w = shirshov_decompose(u)
        val = bracket(B, BRAIDED, bracket_of_word(B, v), bracket_of_word(B, w))
    else:
        factors = lyndon_factorization(u)
        val = bracket_of_word(B, factors[0])
        for f in factors[1:]:
            val = bracket(B, BRAIDED, val, bracket_of_word(B, f))
    memo[u] = val
    return val


def superword(B: Bicharacter, lyndon_words: Iterable[Word]) -> Element:
    val = unit_element(B)
    for w in lyndon_words:
        val = mul(val, bracket_of_word(B, w))
    return val


def minus_bracket_of_word(B: Bicharacter, u: Word) -> Element:
    """[u]^- : the same recursion as [u] with the unbraided commutator."""
    u = tuple(u)
    if len(u) == 1:
        return letter(B, u[0])
    if is_lyndon(u):
        v, w = shirshov_decompose(u)
        return bracket(B, MINUS, minus_bracket_of_word(B, v), minus_bracket_of_word(B, w))
    factors = lyndon_factorization(u)
    val = minus_bracket_of_word(B, factors[0])
    for f in factors[1:]:
        val = bracket(B, MINUS, val, minus_bracket_of_word(B, f))
    return val
