"""Exact arithmetic in K = Q(zeta_N)(t_1, ..., t_k).

Two concrete scalar classes share one interface:

* :class:`Cyclo` -- an element of Q(zeta_N), stored as its coordinate vector in
  the power basis 1, z, ..., z^(phi(N)-1) with z = zeta_N.  Used whenever the
  context declares no parameters.
* :class:`RatFunc` -- a reduced quotient of polynomials in the parameters whose
  coefficients are :class:`Cyclo` numbers.  The denominator is monic in lex
  order, so two equal field elements have identical representations.

Parameters are treated as independent transcendentals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Union

from gmpy2 import mpq

INFINITE = math.inf

Exp = tuple[int, ...]


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _int_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _int_exact_div(a: list[int], b: tuple[int, ...]) -> list[int]:
    # b is monic
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            q[k - db] = c
            for i, bi in enumerate(b):
                a[k - db + i] -= c * bi
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


# ---------------------------------------------------------------------------
# univariate helpers over Q, used for inverses in Q(zeta_N)


def _qpoly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [mpq(0)] * max(len(a) - db, 1)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lb
        if c:
            q[k - db] = c
            for i, bi in enumerate(b):
                a[k - db + i] -= c * bi
    return _qpoly_trim(q), _qpoly_trim(a[:db] if db else [])


def _qpoly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    r = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return _qpoly_trim(r)


def _qpoly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    r = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _qpoly_trim([mpq(x) for x in r])


def _qpoly_inverse_mod(a: list, m: list) -> list:
    """s with s*a = 1 mod m, for coprime a and m."""
    r0, r1 = list(m), list(a)
    s0, s1 = [], [mpq(1)]
    while r1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    c = r0[0]
    return [x / c for x in s0]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycloContext:
    """The coefficient field: conductor ``N`` and parameter names."""

    N: int = 1
    params: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1:
            raise ValueError(f"conductor must be a positive integer, got {self.N!r}")
        object.__setattr__(self, "params", tuple(self.params))
        if len(set(self.params)) != len(self.params):
            raise ValueError("parameter names must be distinct")
        for name in self.params:
            if not (name.isascii() and name.isidentifier()) or name == "z":
                raise ValueError(f"invalid parameter name {name!r}")

    @cached_property
    def phi(self) -> tuple[int, ...]:
        return cyclotomic_polynomial(self.N)

    @cached_property
    def degree(self) -> int:
        return len(self.phi) - 1

    @cached_property
    def _reduction(self) -> list[list[int]]:
        # z^k for degree <= k <= 2*degree - 2, in the power basis
        d = self.degree
        table = []
        cur = [-c for c in self.phi[:d]]  # z^d
        for _ in range(max(d - 1, 0)):
            table.append(cur)
            top = cur[-1]
            nxt = [0] + cur[:-1]
            if top:
                nxt = [x - top * c for x, c in zip(nxt, self.phi[:d])]
            cur = nxt
        return table

    @cached_property
    def base(self) -> CycloContext:
        return self if not self.params else CycloContext(self.N)

    @property
    def nvars(self) -> int:
        return len(self.params)

    # constructors -----------------------------------------------------------

    def const(self, x) -> Scalar:
        c = Cyclo.from_rational(self.base, x)
        if not self.params:
            return c
        return RatFunc._from_cyclo(self, c)

    @property
    def zero(self) -> Scalar:
        return self.const(0)

    @property
    def one(self) -> Scalar:
        return self.const(1)

    def zeta(self, k: int = 1) -> Scalar:
        """z^k, z the fixed primitive N-th root of unity."""
        c = Cyclo.zeta_power(self.base, k)
        if not self.params:
            return c
        return RatFunc._from_cyclo(self, c)

    def param(self, name: str) -> Scalar:
        if name not in self.params:
            raise KeyError(f"unknown parameter {name!r}")
        e = tuple(1 if p == name else 0 for p in self.params)
        return RatFunc(self, {e: Cyclo.from_rational(self.base, 1)}, _one_poly(self), _reduce=False)

    def coerce(self, x) -> Scalar:
        if isinstance(x, (Cyclo, RatFunc)):
            if x.ctx != self:
                raise ValueError("scalars from different contexts")
            return x
        return self.const(x)


# ---------------------------------------------------------------------------


class Cyclo:
    """Element of Q(zeta_N) in the power basis of z = zeta_N."""

    __slots__ = ("ctx", "c")

    def __init__(self, ctx: CycloContext, coeffs):
        self.ctx = ctx
        self.c = tuple(coeffs)

    @classmethod
    def from_rational(cls, ctx: CycloContext, x) -> Cyclo:
        if isinstance(x, Fraction):
            x = mpq(x.numerator, x.denominator)
        return cls(ctx, (mpq(x),) + (mpq(0),) * (ctx.degree - 1))

    @classmethod
    def zeta_power(cls, ctx: CycloContext, k: int) -> Cyclo:
        k %= ctx.N
        d = ctx.degree
        if k < d:
            return cls(ctx, tuple(mpq(1 if i == k else 0) for i in range(d)))
        z = cls(ctx, tuple(mpq(1 if i == 1 else 0) for i in range(d))) if d > 1 else None
        if z is None:  # N in {1, 2}: z is rational
            return cls.from_rational(ctx, 1 if ctx.N == 1 or k % 2 == 0 else -1)
        return z ** k

    # predicates --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self) -> bool:
        return any(self.c)

    def is_one(self) -> bool:
        return self.c[0] == 1 and not any(self.c[1:])

    def is_constant(self) -> bool:
        return True

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    # arithmetic --------------------------------------------------------------

    def _lift(self, other) -> Cyclo:
        if isinstance(other, Cyclo):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ValueError("scalars from different contexts")
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return Cyclo.from_rational(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Cyclo(self.ctx, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.ctx, [-a for a in self.c])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Cyclo(self.ctx, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.c, o.c
        d = len(a)
        if d == 1:
            return Cyclo(self.ctx, (a[0] * b[0],))
        prod = [mpq(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        res = prod[:d]
        for k, row in enumerate(self.ctx._reduction):
            t = prod[d + k]
            if t:
                for i, r in enumerate(row):
                    if r:
                        res[i] += t * r
        return Cyclo(self.ctx, res)

    __rmul__ = __mul__

    def inverse(self) -> Cyclo:
        if self.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if len(self.c) == 1 or self.is_rational():
            inv = 1 / self.c[0]
            return Cyclo(self.ctx, (inv,) + self.c[1:])
        s = _qpoly_inverse_mod(_qpoly_trim(list(self.c)), [mpq(x) for x in self.ctx.phi])
        s = s + [mpq(0)] * (self.ctx.degree - len(s))
        return Cyclo(self.ctx, s)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo.from_rational(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, RatFunc) else NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash(self.c)

    def order(self):
        return order(self)

    def embeddings(self) -> list[complex]:
        """Images under all complex embeddings z -> exp(2 pi i k / N), gcd(k, N) = 1."""
        out = []
        N = self.ctx.N
        for k in range(1, N + 1):
            if math.gcd(k, N) == 1:
                w = complex(math.cos(2 * math.pi * k / N), math.sin(2 * math.pi * k / N))
                out.append(sum(float(a) * w**i for i, a in enumerate(self.c)))
        return out

    def __str__(self):
        return _format_cyclo(self)

    def __repr__(self):
        return f"Cyclo({self}; N={self.ctx.N})"


def _format_rational(q) -> str:
    return str(q)


def _format_cyclo(x: Cyclo) -> str:
    terms = []
    for k in range(len(x.c) - 1, -1, -1):
        a = x.c[k]
        if not a:
            continue
        if k == 0:
            body = _format_rational(abs(a))
        else:
            zk = "z" if k == 1 else f"z^{k}"
            body = zk if abs(a) == 1 else f"{_format_rational(abs(a))}*{zk}"
        terms.append(("-" if a < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# sparse multivariate polynomials {exponent tuple: Cyclo}

Poly = dict


def _one_poly(ctx: CycloContext) -> Poly:
    return {(0,) * ctx.nvars: Cyclo.from_rational(ctx.base, 1)}


def _padd(a: Poly, b: Poly, sign: int = 1) -> Poly:
    r = dict(a)
    for e, c in b.items():
        if e in r:
            s = r[e] + c if sign > 0 else r[e] - c
            if s:
                r[e] = s
            else:
                del r[e]
        else:
            r[e] = c if sign > 0 else -c
    return r


def _pmul(a: Poly, b: Poly) -> Poly:
    if len(a) == 1 and len(b) == 1:
        (e1, c1), = a.items()
        (e2, c2), = b.items()
        return {tuple(x + y for x, y in zip(e1, e2)): c1 * c2}
    r: Poly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            t = c1 * c2
            if e in r:
                r[e] = r[e] + t
            else:
                r[e] = t
    return {e: c for e, c in r.items() if c}


def _pscale(a: Poly, c: Cyclo) -> Poly:
    return {e: x * c for e, x in a.items()}


def _pshift(a: Poly, m: Exp, sign: int = 1) -> Poly:
    return {tuple(x + sign * y for x, y in zip(e, m)): c for e, c in a.items()}


def _pmin_exp(a: Poly) -> Exp:
    it = iter(a)
    m = list(next(it))
    for e in it:
        for i, x in enumerate(e):
            if x < m[i]:
                m[i] = x
    return tuple(m)


def _plead(a: Poly) -> tuple[Exp, Cyclo]:
    e = max(a)
    return e, a[e]


def _pmonic(a: Poly) -> Poly:
    _, c = _plead(a)
    if c.is_one():
        return a
    return _pscale(a, c.inverse())


def _pdivexact(a: Poly, b: Poly) -> Poly:
    if len(b) == 1:
        (eb, cb), = b.items()
        inv = cb.inverse()
        out = {}
        for e, c in a.items():
            d = tuple(x - y for x, y in zip(e, eb))
            if min(d, default=0) < 0:
                raise ArithmeticError("inexact polynomial division")
            out[d] = c * inv
        return out
    eb, cb = _plead(b)
    inv = cb.inverse()
    q: Poly = {}
    r = a
    while r:
        e, c = _plead(r)
        d = tuple(x - y for x, y in zip(e, eb))
        if min(d, default=0) < 0:
            raise ArithmeticError("inexact polynomial division")
        t = {d: c * inv}
        q = _padd(q, t)
        r = _padd(r, _pmul(t, b), -1)
    return q


def _pvars(a: Poly) -> set[int]:
    out = set()
    for e in a:
        out.update(i for i, x in enumerate(e) if x)
    return out


def _pcoeffs(a: Poly, v: int) -> dict[int, Poly]:
    out: dict[int, Poly] = {}
    for e, c in a.items():
        k = e[v]
        e0 = e[:v] + (0,) + e[v + 1:]
        out.setdefault(k, {})[e0] = c
    return out


def _pcontent(a: Poly, v: int) -> Poly:
    g = None
    for c in _pcoeffs(a, v).values():
        g = c if g is None else _pgcd(g, c)
        if len(g) == 1 and not any(next(iter(g))):
            break
    return _pmonic(g)


def _pprem(a: Poly, b: Poly, v: int) -> Poly:
    cb = _pcoeffs(b, v)
    db = max(cb)
    lb = cb[db]
    r = a
    while r:
        cr = _pcoeffs(r, v)
        dr = max(cr)
        if dr < db:
            break
        shift = tuple(dr - db if i == v else 0 for i in range(len(next(iter(a)))))
        r = _padd(_pmul(lb, r), _pmul(_pshift(cr[dr], shift), b), -1)
    return r


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the coefficient field."""
    if not a:
        return _pmonic(b)
    if not b:
        return _pmonic(a)
    ma, mb = _pmin_exp(a), _pmin_exp(b)
    m = tuple(min(x, y) for x, y in zip(ma, mb))
    a, b = _pshift(a, ma, -1), _pshift(b, mb, -1)
    g = _pgcd_nomono(a, b)
    return _pmonic(_pshift(g, m))


def _pgcd_nomono(a: Poly, b: Poly) -> Poly:
    nv = len(next(iter(a)))
    one = {(0,) * nv: Cyclo.from_rational(next(iter(a.values())).ctx, 1)}
    va, vb = _pvars(a), _pvars(b)
    if not va or not vb:
        return one
    common = va & vb
    if not common:
        v = min(va)
        return _pgcd(_pcontent(a, v), b)
    v = min(common)
    for w in sorted(va | vb):
        if w not in common:
            if w in va:
                return _pgcd(_pcontent(a, w), b)
            return _pgcd(a, _pcontent(b, w))
    ca, cb = _pcontent(a, v), _pcontent(b, v)
    c = _pgcd(ca, cb)
    A, B = _pdivexact(a, ca), _pdivexact(b, cb)
    if max(e[v] for e in A) < max(e[v] for e in B):
        A, B = B, A
    while True:
        R = _pprem(A, B, v)
        if not R:
            break
        if v not in _pvars(R):
            B = one
            break
        A, B = B, _pdivexact(R, _pcontent(R, v))
    B = _pdivexact(B, _pcontent(B, v)) if v in _pvars(B) else one
    return _pmul(c, B)


def _pformat(a: Poly, names: tuple[str, ...]) -> str:
    if not a:
        return "0"
    parts = []
    for e in sorted(a, reverse=True):
        c = a[e]
        mono = "*".join(
            (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
        )
        cs = str(c)
        if not mono:
            parts.append(cs)
            continue
        if c.is_rational():
            r = c.c[0]
            if r == 1:
                parts.append(mono)
            elif r == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{r}*{mono}")
        elif sum(1 for x in c.c if x) == 1:
            parts.append(f"{cs}*{mono}")
        else:
            parts.append(f"({cs})*{mono}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced quotient num/den of polynomials in the context parameters."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: CycloContext, num: Poly, den: Poly, _reduce: bool = True):
        self.ctx = ctx
        if _reduce:
            num, den = _normalize(ctx, num, den)
        self.num = num
        self.den = den

    @classmethod
    def _from_cyclo(cls, ctx: CycloContext, c: Cyclo) -> RatFunc:
        num = {(0,) * ctx.nvars: c} if c else {}
        return cls(ctx, num, _one_poly(ctx), _reduce=False)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return (
            len(self.den) == 1
            and not any(next(iter(self.den)))
            and len(self.num) <= 1
            and not any(x for e in self.num for x in e)
        )

    def constant(self) -> Cyclo:
        if not self.is_constant():
            raise ValueError("not a constant")
        if not self.num:
            return Cyclo.from_rational(self.ctx.base, 0)
        return next(iter(self.num.values()))

    def is_one(self) -> bool:
        return self.is_constant() and self.constant().is_one()

    def degree_profile(self) -> tuple[int, ...]:
        """Per parameter: degree of numerator plus degree of denominator."""
        nv = self.ctx.nvars
        out = []
        for v in range(nv):
            dn = max((e[v] for e in self.num), default=0)
            dd = max((e[v] for e in self.den), default=0)
            out.append(dn + dd)
        return tuple(out)

    def _lift(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            if other.ctx != self.ctx:
                raise ValueError("scalars from different contexts")
            return other
        if isinstance(other, Cyclo):
            if other.ctx != self.ctx.base:
                raise ValueError("scalars from different contexts")
            return RatFunc._from_cyclo(self.ctx, other)
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RatFunc(self.ctx, _padd(self.num, o.num), self.den)
        num = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return RatFunc(self.ctx, num, _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.ctx, {e: -c for e, c in self.num.items()}, self.den, _reduce=False)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return RatFunc(self.ctx, {}, _one_poly(self.ctx), _reduce=False)
        return RatFunc(self.ctx, _pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num:
            raise ZeroDivisionError("division by zero scalar")
        return RatFunc(self.ctx, self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return self.ctx.one
        # num^k / den^k stays reduced
        num, den = self.num, self.den
        rn, rd = _one_poly(self.ctx), _one_poly(self.ctx)
        while k:
            if k & 1:
                rn, rd = _pmul(rn, num), _pmul(rd, den)
            k >>= 1
            if k:
                num, den = _pmul(num, num), _pmul(den, den)
        return RatFunc(self.ctx, rn, rd, _reduce=False)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))

    def order(self):
        return order(self)

    def __str__(self):
        n = _pformat(self.num, self.ctx.params)
        if len(self.den) == 1 and next(iter(self.den.values())).is_one() and not any(next(iter(self.den))):
            return n
        d = _pformat(self.den, self.ctx.params)
        return f"({n})/({d})"

    def __repr__(self):
        return f"RatFunc({self})"


def _normalize(ctx: CycloContext, num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise ZeroDivisionError("division by zero scalar")
    if not num:
        return {}, _one_poly(ctx)
    mn, md = _pmin_exp(num), _pmin_exp(den)
    m = tuple(min(x, y) for x, y in zip(mn, md))
    if any(m):
        num, den = _pshift(num, m, -1), _pshift(den, m, -1)
    if len(num) > 1 and len(den) > 1:
        g = _pgcd_nomono(_pshift(num, _pmin_exp(num), -1), _pshift(den, _pmin_exp(den), -1))
        if len(g) > 1:
            num, den = _pdivexact(num, g), _pdivexact(den, g)
    _, lc = _plead(den)
    if not lc.is_one():
        inv = lc.inverse()
        num, den = _pscale(num, inv), _pscale(den, inv)
    return num, den


Scalar = Union[Cyclo, RatFunc]


# ---------------------------------------------------------------------------
# spec-level operations


def arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def order(x: Scalar):
    """Multiplicative order of a nonzero scalar: a positive int or INFINITE."""
    if x.is_zero():
        raise ValueError("order of zero is undefined")
    if isinstance(x, RatFunc):
        if not x.is_constant():
            return INFINITE
        x = x.constant()
    return _cyclo_order(x)


def _cyclo_order(x: Cyclo):
    for d in divisors(2 * x.ctx.N):
        if (x ** d).is_one():
            return d
    return INFINITE


def q_factorial(m: int, a: Scalar) -> Scalar:
    """(m)_a! = prod_{k=1..m} (1 + a + ... + a^(k-1))."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    one = a.ctx.one if isinstance(a, RatFunc) else Cyclo.from_rational(a.ctx, 1)
    result = one
    qint = one - one
    power = one
    for _ in range(m):
        qint = qint + power
        power = power * a
        result = result * qint
    return result


def solve_power(x: Scalar, y: Scalar, bound: int = 256):
    """Least m >= 0 with x^m == y, or None; x is assumed to have infinite order.

    Nonconstant x: x^m has degree profile m * profile(x), which pins m.
    Constant x: compare absolute values under complex embeddings.
    """
    if isinstance(x, RatFunc) and not x.is_constant():
        px = x.degree_profile()
        py = y.degree_profile() if isinstance(y, RatFunc) else (0,) * len(px)
        v = next(i for i, k in enumerate(px) if k)
        if py[v] % px[v]:
            return None
        m = py[v] // px[v]
        return m if x ** m == y else None
    if isinstance(y, RatFunc):
        if not y.is_constant():
            return None
        y = y.constant()
    if isinstance(x, RatFunc):
        x = x.constant()
    for ex, ey in zip(x.embeddings(), y.embeddings()):
        ax, ay = abs(ex), abs(ey)
        if ay == 0:
            return None
        if abs(math.log(ax)) > 1e-9:
            m = round(math.log(ay) / math.log(ax))
            if m < 0:
                return None
            return m if x ** m == y else None
    # every embedding of x lies on the unit circle without x being a root of unity
    p = x ** 0
    for m in range(bound + 1):
        if p == y:
            return m
        p = p * x
    return None
