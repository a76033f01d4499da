import json

import pytest
from hypothesis import given, strategies as st

from nicholsdiag.parser_io import (
    ParseError,
    emit_report,
    format_instance,
    parse_instance,
    parse_scalar,
)
from nicholsdiag.scalars import CycloContext


def test_a2_zeta3_instance():
    spec = parse_instance("rank 2; conductor 3; q 1 1 = z; q 1 2 = z^2; q 2 1 = 1; q 2 2 = z")
    B = spec.bicharacter()
    z = B.ctx.zeta(1)
    assert spec.rank == 2 and spec.conductor == 3 and spec.params == ()
    assert B.p_tilde((1, 0), (0, 1)) == z**-1
    assert B.q[1][1] == z


def test_generic_instance():
    spec = parse_instance("rank 2; params q; q 1 1 = q; q 1 2 = q^-1; q 2 1 = 1; q 2 2 = q")
    B = spec.bicharacter()
    q = B.ctx.param("q")
    assert B.q[0][1] == q**-1 and spec.entries[0][1] == "(1)/(q)"


def test_comments_and_newlines():
    text = """
    # A2 at a cube root of unity
    rank 2          # two letters
    conductor 3
    q 1 1 = z ; q 1 2 = z^2
    q 2 1 = 1 ; q 2 2 = z
    """
    assert parse_instance(text).entries == (("z", "-z - 1"), ("1", "z"))


@pytest.mark.parametrize("text,msg,line,col", [
    ("rank 1; q 1 1 = 0", "zero entry", 1, 17),
    ("rank 1; q 1 1 = w", "unknown symbol", 1, 17),
    ("rank 2; q 1 1 = 1", "missing entry q 1 2", 1, 1),
    ("rank 1\nq 1 1 = (1", "expected ')'", 2, 11),
    ("rank 1; q 1 1 = 1 $", "unexpected character", 1, 19),
    ("rank 1; q 2 1 = 1; q 1 1 = 1", "outside", 1, 11),
    ("q 1 1 = 1", "missing 'rank'", 1, 10),
    ("rank 1; q 1 1 = 1/0", "division by zero", 1, 18),
    ("rank 1; q 1 1 = z ^ x", "exponent", 1, 21),
    ("rank 1; q 1 1 =", "empty expression", 1, 16),
    ("rank x", "positive integer", 1, 1),
    ("rank 1; rank 1; q 1 1 = 1", "duplicate", 1, 9),
    ("rank 1; q 1 1 = 1; q 1 1 = 2", "duplicate entry", 1, 20),
    ("rank 1; params z; q 1 1 = 1", "invalid parameter", 1, 9),
    ("rank 1; frobnicate", "unrecognized", 1, 9),
    ("rank 1; q 1 1 = 0^-1", "negative power", 1, 18),
])
def test_diagnostics(text, msg, line, col):
    with pytest.raises(ParseError) as exc:
        parse_instance(text)
    assert msg in exc.value.message
    assert (exc.value.line, exc.value.column) == (line, col)


def test_expression_grammar():
    ctx = CycloContext(12, ("q",))
    z, q = ctx.zeta(1), ctx.param("q")
    assert parse_scalar(ctx, "-z^2") == -(z**2)
    assert parse_scalar(ctx, "2*z^-1/3") == 2 * z**-1 / 3
    assert parse_scalar(ctx, "(q + 1)^(2) - q^2") == 2 * q + 1
    assert parse_scalar(ctx, "1/2/2") == ctx.const(1) / 4
    assert parse_scalar(ctx, "z^(-3)") == z**9


entry = st.recursive(
    st.sampled_from(["z", "q", "1", "2", "3/4", "-1"]),
    lambda inner: st.tuples(inner, st.sampled_from(["+", "*", "/", "-"]), inner).map(lambda t: f"({t[0]} {t[1]} {t[2]})")
    | st.tuples(inner, st.integers(-3, 3)).map(lambda t: f"{t[0]}^{t[1]}"),
    max_leaves=5,
)


@given(st.sampled_from([1, 3, 4, 5]), st.lists(entry, min_size=4, max_size=4))
def test_round_trip(N, exprs):
    text = f"rank 2\nconductor {N}\nparams q\n" + "\n".join(
        f"q {i} {j} = {e}" for (i, j), e in zip([(1, 1), (1, 2), (2, 1), (2, 2)], exprs)
    )
    try:
        spec = parse_instance(text)
    except ParseError:
        return  # zero entries or divisions by zero are legitimately rejected
    again = parse_instance(format_instance(spec))
    assert again == spec
    assert again.values == spec.values


def test_emit_report_text_and_json():
    report = [
        ("dim_B", "27"),
        ("roots", [(1, 0), (0, 1), (1, 1)]),
        ("groupoid", {"full": True, "states": 6}),
        ("notes", []),
        ("top_degree", None),
    ]
    text = emit_report(report)
    assert text.splitlines() == [
        "dim_B = 27",
        "roots = [(1,0),(0,1),(1,1)]",
        "groupoid.full = true",
        "groupoid.states = 6",
        "notes = []",
        "top_degree = none",
    ]
    data = json.loads(emit_report(report, "structured"))
    assert list(data) == ["dim_B", "roots", "groupoid", "notes", "top_degree"]
    assert data["roots"][2] == [1, 1]
    with pytest.raises(ValueError):
        emit_report(report, "xml")


def test_exponent_cap():
    with pytest.raises(ParseError) as exc:
        parse_instance("rank 1; params q; q 1 1 = q^99999999")
    assert exc.value.column == 29


@given(st.text(alphabet="rankconductorparmsq z0123456789+-*/^();#=\n xw", max_size=80))
def test_fuzz_never_escapes_without_diagnostic(text):
    try:
        parse_instance(text)
    except ParseError as exc:
        assert exc.line >= 1 and exc.column >= 1
