"""Randomized checks of the braided Jacobi identity and the bracket product rule.

Both identities are checked in the tensor algebra, which is stronger than
checking them in B(V).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .balgebra import BRAIDED, Element, bracket, mul
from .lattice import Bicharacter
from .scalars import CycloContext, Scalar


def random_scalar(ctx: CycloContext, rng: random.Random, nonzero: bool = False) -> Scalar:
    """Small integer times a root of unity power, times a parameter power if any."""
    while True:
        x = ctx.const(rng.randint(-3, 3)) * ctx.zeta(rng.randrange(ctx.N))
        for name in ctx.params:
            x = x * ctx.param(name) ** rng.randint(-1, 1)
        if x or not nonzero:
            return x


def random_bicharacter(ctx: CycloContext, n: int, rng: random.Random) -> Bicharacter:
    q = []
    for _ in range(n):
        row = []
        for _ in range(n):
            x = ctx.zeta(rng.randrange(ctx.N))
            for name in ctx.params:
                x = x * ctx.param(name) ** rng.randint(-2, 2)
            row.append(x)
        q.append(row)
    return Bicharacter(ctx, q)


def random_homogeneous(B: Bicharacter, rng: random.Random, length: int, terms: int = 3) -> Element:
    """A nonzero homogeneous element: a few rearrangements of one random word."""
    base = [rng.randrange(B.n) for _ in range(length)]
    acc: dict = {}
    for _ in range(terms):
        w = base[:]
        rng.shuffle(w)
        acc[tuple(w)] = random_scalar(B.ctx, rng, nonzero=True)
    e = Element(acc)
    return e if e else Element({tuple(base): B.ctx.one})


def jacobi_sides(B: Bicharacter, u: Element, v: Element, w: Element) -> tuple[Element, Element]:
    """[[u,v],w] and [u,[v,w]] + p_vw^-1 [[u,w],v] + (p_wv - p_vw^-1) v[u,w]."""
    n = B.n
    du, dv, dw = u.multidegree(n), v.multidegree(n), w.multidegree(n)
    pvw_inv = B.chi(dv, dw).inverse()
    pwv = B.chi(dw, dv)
    uw = bracket(B, BRAIDED, u, w)
    lhs = bracket(B, BRAIDED, bracket(B, BRAIDED, u, v), w)
    rhs = (
        bracket(B, BRAIDED, u, bracket(B, BRAIDED, v, w))
        + bracket(B, BRAIDED, uw, v).scale(pvw_inv)
        + mul(v, uw).scale(pwv - pvw_inv)
    )
    return lhs, rhs


def product_rule_sides(B: Bicharacter, u: Element, v: Element, w: Element) -> tuple[Element, Element]:
    """[u, vw] and p_wu [u,v] w + v [u,w]."""
    n = B.n
    pwu = B.chi(w.multidegree(n), u.multidegree(n))
    lhs = bracket(B, BRAIDED, u, mul(v, w))
    rhs = mul(bracket(B, BRAIDED, u, v), w).scale(pwu) + mul(v, bracket(B, BRAIDED, u, w))
    return lhs, rhs


@dataclass
class IdentityTally:
    triples: int = 0
    jacobi_failures: int = 0
    product_failures: int = 0

    @property
    def ok(self) -> bool:
        return self.triples > 0 and not (self.jacobi_failures or self.product_failures)


def check_identities(B: Bicharacter, rng: random.Random, triples: int, max_total: int = 5) -> IdentityTally:
    """Draw homogeneous triples of total degree <= max_total and test both identities."""
    if max_total < 3:
        raise ValueError("need total degree at least 3 for a triple")
    tally = IdentityTally()
    for _ in range(triples):
        total = rng.randint(3, max_total)
        a = rng.randint(1, total - 2)
        b = rng.randint(1, total - a - 1)
        c = total - a - b
        u, v, w = (random_homogeneous(B, rng, k) for k in (a, b, c))
        tally.triples += 1
        lhs, rhs = jacobi_sides(B, u, v, w)
        if lhs != rhs:
            tally.jacobi_failures += 1
        lhs, rhs = product_rule_sides(B, u, v, w)
        if lhs != rhs:
            tally.product_failures += 1
    return tally
