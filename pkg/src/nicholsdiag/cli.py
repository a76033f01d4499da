"""Command-line front end.

Exit codes: 0 on success (including ``unknown`` verdicts from exhausted caps),
2 on input errors (unreadable file, parse diagnostics, disconnected braiding).
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Optional

from .balgebra import BRAIDED, MINUS
from .identities import check_identities
from .lattice import Bicharacter
from .lie import bracket_pairing_checks, infinite_witness, lie_dims
from .nichols import (
    DEFAULT_MAX_DEGREE,
    DisconnectedError,
    FinitenessReport,
    RootDatum,
    check_heights,
    decide_finiteness,
    hard_super_letters,
    hilbert,
)
from .parser_io import InstanceSpec, ParseError, Report, emit_report, parse_instance
from .scalars import INFINITE
from .weyl import DEFAULT_CAP_STATES, generate_groupoid
from .words import format_word

COMMANDS = ("analyze", "roots", "groupoid", "hilbert", "lie", "verify-identities")
DEFAULT_SEED = 20150101


def _fmt_order(x) -> str:
    if x is None:
        return "unchecked"
    return "infinite" if x is INFINITE else str(x)


def _instance_fields(spec: InstanceSpec) -> Report:
    return [
        ("rank", spec.rank),
        ("conductor", spec.conductor),
        ("params", list(spec.params)),
    ]


def _root_fields(roots: list[RootDatum]) -> Report:
    out = []
    for k, r in enumerate(roots, start=1):
        out.append((f"root.{k}", {
            "degree": r.root,
            "word": format_word(r.lyndon),
            "p_uu": str(r.p_uu),
            "ord_p_uu": _fmt_order(r.ord_puu),
            "height": _fmt_order(r.height),
            "flag": r.flag,
        }))
    return out


def _groupoid_fields(G) -> Report:
    return [
        ("groupoid", {
            "states": len(G.states),
            "full": G.full,
            "finite": G.finite,
            "roots": len(G.roots),
            "positive_roots": G.positive_roots,
        }),
    ]


def _lie_fields(B: Bicharacter, D: int) -> tuple[Report, dict]:
    out: Report = []
    spans = {}
    for kind in (BRAIDED, MINUS):
        span = lie_dims(B, kind, D)
        spans[kind] = span
        out.append((f"lie.{kind}", {
            "max_degree": D,
            "dims": span.dims_list(),
            "total": span.total,
            "saturated": span.saturated,
        }))
    if B.n >= 2:
        w = infinite_witness(B)
        out.append(("lie_minus_witness", "none" if w is None else f"({w.i + 1},{w.j + 1}) {w.reason}"))
    return out, spans


def analyze(spec: InstanceSpec, max_degree: int, cap_states: int) -> Report:
    B = spec.bicharacter()
    rep: FinitenessReport = decide_finiteness(B, max_degree, cap_states)
    top = rep.top_degree
    lie_degree = top + 1 if top is not None else max_degree
    lie_report, spans = _lie_fields(B, lie_degree)

    dim_L, dim_Lm = rep.dim_L, rep.dim_L_minus
    if dim_L.status == "finite" and dim_L.dim is None and spans[BRAIDED].saturated:
        dim_L.dim = spans[BRAIDED].total
    if dim_Lm.status == "finite" and dim_Lm.dim is None and spans[MINUS].saturated:
        dim_Lm.dim = spans[MINUS].total

    hil_degree = max_degree if top is None else min(max_degree, top)
    series = hilbert(B, hil_degree)

    out: Report = _instance_fields(spec)
    out += [
        ("connected", rep.connected),
        ("max_degree", max_degree),
        ("cap_states", cap_states),
        ("arithmetic_root_system", rep.arithmetic),
    ]
    if rep.groupoid is not None:
        out += _groupoid_fields(rep.groupoid)
    out += [
        ("order_checks", {k: _fmt_order(v) for k, v in rep.order_checks.items()}),
        ("roots", [r.root for r in rep.roots]),
        ("roots_complete", rep.roots_complete),
    ]
    out += _root_fields(rep.roots)
    out += [
        ("dim_B", str(rep.dim_B)),
        ("dim_L", str(dim_L)),
        ("dim_L_minus", str(dim_Lm)),
        ("top_degree", top),
        ("hilbert", series.coefficients),
        ("hilbert_total", series.total),
    ]
    out += lie_report
    out.append(("route", rep.route))
    out.append(("notes", rep.notes))
    return out


def cmd_roots(spec: InstanceSpec, D: int) -> Report:
    B = spec.bicharacter()
    roots = check_heights(B, hard_super_letters(B, D), D)
    return _instance_fields(spec) + [("max_degree", D), ("roots", [r.root for r in roots])] + _root_fields(roots)


def cmd_groupoid(spec: InstanceSpec, cap: int) -> Report:
    B = spec.bicharacter()
    G = generate_groupoid(B, cap_states=cap)
    return _instance_fields(spec) + [("cap_states", cap)] + _groupoid_fields(G) + [
        ("undefined_reflections", [(s, k + 1) for s, k in G.undefined]),
    ]


def cmd_hilbert(spec: InstanceSpec, D: int) -> Report:
    series = hilbert(spec.bicharacter(), D)
    return _instance_fields(spec) + [
        ("max_degree", D),
        ("hilbert", series.coefficients),
        ("hilbert_total", series.total),
    ]


def cmd_lie(spec: InstanceSpec, D: int) -> Report:
    fields, _ = _lie_fields(spec.bicharacter(), D)
    return _instance_fields(spec) + fields


def cmd_verify(spec: InstanceSpec, seed: int, triples: int = 60, m_max: int = 4) -> Report:
    B = spec.bicharacter()
    rng = random.Random(seed)
    out = _instance_fields(spec) + [("seed", seed)]
    tally = check_identities(B, rng, triples)
    out.append(("identities", {
        "triples": tally.triples,
        "jacobi_failures": tally.jacobi_failures,
        "product_rule_failures": tally.product_failures,
        "result": "pass" if tally.ok else "fail",
    }))
    ok = tally.ok
    for i in range(B.n):
        for j in range(B.n):
            if i == j:
                continue
            rows = bracket_pairing_checks(B, i, j, m_max)
            passed = all(r.ok for r in rows)
            ok = ok and passed
            out.append((f"bracket_pairing.{i + 1}{j + 1}", {
                "m_max": m_max,
                "y_i_power": all(r.y_i_power for r in rows),
                "y_j_y_i_power": all(r.y_j_y_i_power for r in rows),
                "recursion": all(all(r.recursion.values()) for r in rows),
                "result": "pass" if passed else "fail",
            }))
    out.append(("all_checks", "pass" if ok else "fail"))
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nicholsdiag", description="Finiteness diagnostics for Nichols algebras of diagonal type.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help="instance file, or - for stdin")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, help="total degree cap D (default %(default)s)")
    p.add_argument("--cap-states", type=int, default=DEFAULT_CAP_STATES, help="Weyl groupoid state cap (default %(default)s)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for verify-identities")
    return p


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_degree < 1 or args.cap_states < 1:
        print("error: --max-degree and --cap-states must be at least 1", file=stderr)
        return 2
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror}", file=stderr)
        return 2
    try:
        spec = parse_instance(text)
    except ParseError as exc:
        print(f"{args.input}: {exc}", file=stderr)
        return 2
    try:
        if args.command == "analyze":
            report = analyze(spec, args.max_degree, args.cap_states)
        elif args.command == "roots":
            report = cmd_roots(spec, args.max_degree)
        elif args.command == "groupoid":
            report = cmd_groupoid(spec, args.cap_states)
        elif args.command == "hilbert":
            report = cmd_hilbert(spec, args.max_degree)
        elif args.command == "lie":
            report = cmd_lie(spec, args.max_degree)
        else:
            report = cmd_verify(spec, args.seed)
    except DisconnectedError as exc:
        print(f"{args.input}: connectedness error: {exc}", file=stderr)
        return 2
    stdout.write(emit_report(report, args.format))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
