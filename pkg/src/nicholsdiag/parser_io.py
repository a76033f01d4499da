"""Instance files and report output.

Instance format, one statement per line or separated by ``;``, ``#`` starts a comment::

    rank 2
    conductor 3          # z is a primitive 3rd root of unity (default 1)
    params q r           # optional generic parameters
    q 1 1 = z
    q 1 2 = z^2
    q 2 1 = 1
    q 2 2 = z

Entries are expressions in integers, ``z``, the declared parameters, unary minus,
``+ - * /`` and ``^`` with an integer exponent.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Iterator, Optional

from .lattice import Bicharacter
from .scalars import CycloContext, Scalar


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class InstanceSpec:
    rank: int
    conductor: int
    params: tuple[str, ...]
    entries: tuple[tuple[str, ...], ...]  # canonical text of each q_ij
    values: tuple[tuple[Scalar, ...], ...] = field(compare=False, repr=False, default=())

    @property
    def context(self) -> CycloContext:
        return CycloContext(self.conductor, self.params)

    def bicharacter(self) -> Bicharacter:
        return Bicharacter(self.context, [list(r) for r in self.values])


# -- expressions ---------------------------------------------------------------

MAX_EXPONENT = 1000

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


@dataclass
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    col: int


def _tokenize(text: str, line: int, col0: int) -> list[_Tok]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = col0 + m.start(m.lastindex)
        if m.group(1):
            toks.append(_Tok("int", m.group(1), col))
        elif m.group(2):
            toks.append(_Tok("name", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", line, col)
            toks.append(_Tok("op", ch, col))
        pos = m.end()
    toks.append(_Tok("end", "", col0 + len(text)))
    return toks


class _ExprParser:
    """expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
    unary := ('-'|'+') unary | power; power := atom ('^' ['-'|'+'] int)?;
    atom := int | name | '(' expr ')'."""

    def __init__(self, ctx: CycloContext, toks: list[_Tok], line: int):
        self.ctx = ctx
        self.toks = toks
        self.i = 0
        self.line = line

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: Optional[_Tok] = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok.col)

    def parse(self) -> Scalar:
        if self.peek().kind == "end":
            raise self.error("empty expression")
        val = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return val

    def expr(self) -> Scalar:
        val = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.take().text
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> Scalar:
        val = self.unary()
        while self.peek().text in ("*", "/") and self.peek().kind == "op":
            tok = self.take()
            rhs = self.unary()
            if tok.text == "*":
                val = val * rhs
            elif not rhs:
                raise self.error("division by zero", tok)
            else:
                val = val / rhs
        return val

    def unary(self) -> Scalar:
        t = self.peek()
        if t.kind == "op" and t.text in ("-", "+"):
            self.take()
            v = self.unary()
            return -v if t.text == "-" else v
        return self.power()

    def power(self) -> Scalar:
        base = self.atom()
        if not (self.peek().kind == "op" and self.peek().text == "^"):
            return base
        caret = self.take()
        sign = 1
        if self.peek().kind == "op" and self.peek().text in ("-", "+"):
            sign = -1 if self.take().text == "-" else 1
        t = self.peek()
        paren = t.kind == "op" and t.text == "("
        if paren:
            self.take()
            if self.peek().kind == "op" and self.peek().text in ("-", "+"):
                sign *= -1 if self.take().text == "-" else 1
            t = self.peek()
        if t.kind != "int":
            raise self.error("exponent must be an integer", t)
        self.take()
        if paren:
            if not (self.peek().kind == "op" and self.peek().text == ")"):
                raise self.error("expected ')'")
            self.take()
        k = sign * int(t.text)
        if abs(k) > MAX_EXPONENT:
            raise ParseError(f"exponent larger than {MAX_EXPONENT} in absolute value", self.line, t.col)
        if k < 0 and not base:
            raise self.error("zero raised to a negative power", caret)
        return base**k

    def atom(self) -> Scalar:
        t = self.take()
        if t.kind == "int":
            return self.ctx.const(int(t.text))
        if t.kind == "name":
            if t.text == "z":
                return self.ctx.zeta(1)
            if t.text in self.ctx.params:
                return self.ctx.param(t.text)
            raise ParseError(f"unknown symbol {t.text!r}", self.line, t.col)
        if t.kind == "op" and t.text == "(":
            v = self.expr()
            if not (self.peek().kind == "op" and self.peek().text == ")"):
                raise self.error("expected ')'")
            self.take()
            return v
        raise ParseError("unexpected end of expression" if t.kind == "end" else f"unexpected {t.text!r}",
                         self.line, t.col)


def parse_scalar(ctx: CycloContext, text: str, line: int = 1, column: int = 1) -> Scalar:
    return _ExprParser(ctx, _tokenize(text, line, column), line).parse()


# -- instances -------------------------------------------------------------------


def _statements(text: str) -> Iterator[tuple[str, int, int]]:
    """(statement, line, column of first non-blank char), comments stripped."""
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        start = 0
        for piece in body.split(";"):
            stripped = piece.strip()
            if stripped:
                yield stripped, ln, start + len(piece) - len(piece.lstrip()) + 1
            start += len(piece) + 1


_ENTRY = re.compile(r"q\s+(\S+)\s+(\S+)\s*=\s*")


def parse_instance(text: str) -> InstanceSpec:
    rank = conductor = None
    params: tuple[str, ...] = ()
    header_pos: dict[str, tuple[int, int]] = {}
    raw_entries: dict[tuple[int, int], tuple[str, int, int, int]] = {}
    last = (1, 1)
    for stmt, ln, col in _statements(text):
        last = (ln, col + len(stmt))
        key = stmt.split(None, 1)[0]
        if key in ("rank", "conductor", "params"):
            if key in header_pos:
                raise ParseError(f"duplicate {key!r}", ln, col)
            header_pos[key] = (ln, col)
            rest = stmt[len(key):].split()
            if key == "params":
                params = tuple(rest)
                try:
                    CycloContext(1, params)
                except ValueError as exc:
                    raise ParseError(str(exc), ln, col) from None
                continue
            if len(rest) != 1 or not rest[0].isdigit() or int(rest[0]) < 1:
                raise ParseError(f"{key} needs one positive integer", ln, col)
            if key == "rank":
                rank = int(rest[0])
            else:
                conductor = int(rest[0])
            continue
        m = _ENTRY.match(stmt)
        if key == "q" and m:
            idx = []
            for g in (1, 2):
                s = m.group(g)
                if not s.isdigit() or int(s) < 1:
                    raise ParseError(f"bad index {s!r}", ln, col + m.start(g))
                idx.append(int(s))
            ij = (idx[0], idx[1])
            if ij in raw_entries:
                raise ParseError(f"duplicate entry q {ij[0]} {ij[1]}", ln, col)
            raw_entries[ij] = (stmt[m.end():], ln, col + m.end(), col + m.start(1))
            continue
        raise ParseError(f"unrecognized statement {stmt!r}", ln, col)

    if rank is None:
        raise ParseError("missing 'rank'", *last)
    ctx = CycloContext(conductor or 1, params)
    for (i, j), (_, ln, _, icol) in sorted(raw_entries.items()):
        if i > rank or j > rank:
            raise ParseError(f"entry q {i} {j} outside a rank-{rank} matrix", ln, icol)
    rows = []
    for i in range(1, rank + 1):
        row = []
        for j in range(1, rank + 1):
            if (i, j) not in raw_entries:
                raise ParseError(f"missing entry q {i} {j}", *header_pos["rank"])
            src, ln, col, _ = raw_entries[(i, j)]
            val = parse_scalar(ctx, src, ln, col)
            if not val:
                raise ParseError(f"zero entry q {i} {j}", ln, col)
            row.append(val)
        rows.append(tuple(row))
    entries = tuple(tuple(str(x) for x in r) for r in rows)
    return InstanceSpec(rank, ctx.N, ctx.params, entries, tuple(rows))


def format_instance(spec: InstanceSpec) -> str:
    out = [f"rank {spec.rank}", f"conductor {spec.conductor}"]
    if spec.params:
        out.append("params " + " ".join(spec.params))
    for i, row in enumerate(spec.entries, start=1):
        for j, e in enumerate(row, start=1):
            out.append(f"q {i} {j} = {e}")
    return "\n".join(out) + "\n"


# -- reports ---------------------------------------------------------------------

Report = list  # ordered (key, value) pairs


def _text_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, tuple) and v and all(isinstance(x, int) for x in v):
        return "(" + ",".join(map(str, v)) + ")"
    if isinstance(v, (list, tuple)):
        if v and all(isinstance(x, tuple) and all(isinstance(y, int) for y in x) for x in v):
            return "[" + ",".join("(" + ",".join(map(str, x)) + ")" for x in v) + "]"
        return "[" + ", ".join(_text_value(x) for x in v) + "]"
    if isinstance(v, float) and v == float("inf"):
        return "infinite"
    return str(v)


def _json_value(v: Any) -> Any:
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _json_value(x) for k, x in v.items()}
    if isinstance(v, float) and v == float("inf"):
        return "infinite"
    if v is None or isinstance(v, (bool, int, str)):
        return v
    return str(v)


def emit_report(report: Report, fmt: str = "text") -> str:
    """Render an ordered report. text: one ``key = value`` line per field; structured: JSON."""
    if fmt == "text":
        lines = []
        for k, v in report:
            if isinstance(v, dict):
                for sk, sv in v.items():
                    lines.append(f"{k}.{sk} = {_text_value(sv)}")
            else:
                lines.append(f"{k} = {_text_value(v)}")
        return "\n".join(lines) + "\n"
    if fmt == "structured":
        return json.dumps({k: _json_value(v) for k, v in report}, indent=2) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
