"""Weyl groupoid W_{chi,E}: breadth-first generation from the standard basis."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .lattice import Bicharacter, Vec, m_value, unit, vadd, vscale

State = tuple[Vec, ...]

DEFAULT_CAP_STATES = 10000


def standard_basis(n: int) -> State:
    return tuple(unit(n, i) for i in range(n))


def reflect(B: Bicharacter, F: State, k: int) -> Optional[State]:
    """s_{f_k, F}(F) with 0-based k; None if some m(f_k, f) is undefined."""
    fk = F[k]
    out = []
    for f in F:
        m = m_value(B, fk, f)
        if m is None:
            return None
        out.append(vadd(f, vscale(m, fk)))
    return tuple(out)


@dataclass
class GroupoidGraph:
    states: list[State]
    arrows: list[tuple[int, int, int]]  # (source id, 0-based reflection, target id)
    full: bool
    finite: bool
    truncated: bool
    undefined: list[tuple[int, int]] = field(default_factory=list)

    @property
    def roots(self) -> set[Vec]:
        return {v for F in self.states for v in F}

    @property
    def positive_roots(self) -> list[Vec]:
        return sorted(
            (v for v in self.roots if all(x >= 0 for x in v)),
            key=lambda v: (sum(v), tuple(-x for x in v)),
        )

    def adjacency_text(self) -> str:
        """One arrow per line: source id, 1-based reflection index, target id."""
        lines = []
        for sid, F in enumerate(self.states):
            basis = " ".join("(" + ",".join(map(str, v)) + ")" for v in F)
            lines.append(f"# state {sid}: {basis}")
        for s, k, t in self.arrows:
            lines.append(f"{s} {k + 1} {t}")
        return "\n".join(lines) + "\n"


def generate_groupoid(B: Bicharacter, E: Optional[State] = None, cap_states: int = DEFAULT_CAP_STATES) -> GroupoidGraph:
    if cap_states < 1:
        raise ValueError("cap_states must be at least 1")
    if E is None:
        E = standard_basis(B.n)
    ids = {E: 0}
    states = [E]
    arrows = []
    undefined = []
    truncated = False
    queue = deque([E])
    while queue:
        F = queue.popleft()
        sid = ids[F]
        for k in range(B.n):
            G = reflect(B, F, k)
            if G is None:
                undefined.append((sid, k))
                continue
            if G not in ids:
                if len(states) >= cap_states:
                    truncated = True
                    continue
                ids[G] = len(states)
                states.append(G)
                queue.append(G)
            arrows.append((sid, k, ids[G]))
    return GroupoidGraph(
        states=states,
        arrows=arrows,
        full=not undefined,
        finite=not truncated,
        truncated=truncated,
        undefined=undefined,
    )


@dataclass
class ArithmeticVerdict:
    status: str  # "yes", "no" or "unknown"
    graph: GroupoidGraph

    @property
    def roots(self) -> Optional[set[Vec]]:
        return self.graph.roots if self.status == "yes" else None


def is_arithmetic_root_system(B: Bicharacter, E: Optional[State] = None, cap: int = DEFAULT_CAP_STATES) -> ArithmeticVerdict:
    G = generate_groupoid(B, E, cap)
    if not G.full:
        return ArithmeticVerdict("no", G)
    if G.finite:
        return ArithmeticVerdict("yes", G)
    return ArithmeticVerdict("unknown", G)
