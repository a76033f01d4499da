import pytest
from hypothesis import given, strategies as st

from conftest import cyclo_bichar, generic_bichar
from nicholsdiag.lattice import (
    Bicharacter,
    chi_eval,
    components,
    is_connected,
    m_value,
    p_tilde,
    unit,
    vadd,
)
from nicholsdiag.scalars import CycloContext


def test_chi_examples():
    B = generic_bichar([[1, 0], [0, 1]])
    q = B.ctx.param("q")
    e1, e2 = unit(2, 0), unit(2, 1)
    assert chi_eval(B, e1, e2) == B.q[0][1]
    assert chi_eval(B, vadd(e1, e2), e1) == q
    assert chi_eval(B, (-1, 0), e1) == q**-1


def test_p_tilde_examples(a2_generic):
    q = a2_generic.ctx.param("q")
    e1, e2 = (1, 0), (0, 1)
    assert p_tilde(a2_generic, e1, e2) == q**-1
    a = (2, 1)
    assert p_tilde(a2_generic, a, a) == chi_eval(a2_generic, a, a) ** 2


def test_bicharacter_validation():
    ctx = CycloContext(3)
    with pytest.raises(ValueError):
        Bicharacter(ctx, [[1, 1]])
    with pytest.raises(ValueError):
        Bicharacter(ctx, [[0]])
    with pytest.raises(ValueError):
        Bicharacter(ctx, [])


def test_m_value_examples(a2_generic):
    e1, e2 = (1, 0), (0, 1)
    assert m_value(a2_generic, e1, e1) == -2
    assert m_value(a2_generic, e1, e2) == 1
    # p~12 = q: q^m * q = 1 has no solution m >= 0
    B = generic_bichar([[1, 1], [0, 1]])
    assert m_value(B, e1, e2) is None
    # chi(e1, e1) = 1 kills the second branch
    B = generic_bichar([[0, 1], [0, 1]])
    assert m_value(B, e1, e2) is None
    # disconnected pair: m = 0
    assert m_value(generic_bichar([[1, 0], [0, 1]]), e1, e2) == 0


def test_m_value_second_branch():
    # chi(e1,e1) = -1 and p~ = z (order 3): only (-1)^(m+1) = 1 applies, m = 1
    B = cyclo_bichar(6, [[3, 2], [0, 1]])
    assert m_value(B, (1, 0), (0, 1)) == 1


def m_oracle(N, a, b):
    """x = z^a, y = z^b: least m with a*m + b = 0 or (a != 0 and a*(m+1) = 0) mod N."""
    for m in range(2 * N + 2):
        if (a * m + b) % N == 0:
            return m
        if a % N and (a * (m + 1)) % N == 0:
            return m
    return None


@given(st.sampled_from([2, 3, 4, 5, 6, 12]), st.data())
def test_m_value_matches_exponent_oracle(N, data):
    a11, a12, a21, a22 = (data.draw(st.integers(0, N - 1)) for _ in range(4))
    B = cyclo_bichar(N, [[a11, a12], [a21, a22]])
    assert m_value(B, (1, 0), (0, 1)) == m_oracle(N, a11, a12 + a21)
    assert m_value(B, (0, 1), (1, 0)) == m_oracle(N, a22, a12 + a21)


@given(st.data())
def test_chi_is_biadditive(data):
    N = data.draw(st.sampled_from([3, 4, 12]))
    rows = [[data.draw(st.integers(0, N - 1)) for _ in range(3)] for _ in range(3)]
    B = cyclo_bichar(N, rows)
    vec = st.tuples(*[st.integers(-2, 2)] * 3)
    a, b, c = data.draw(vec), data.draw(vec), data.draw(vec)
    assert B.chi(vadd(a, b), c) == B.chi(a, c) * B.chi(b, c)
    assert B.chi(a, vadd(b, c)) == B.chi(a, b) * B.chi(a, c)


def test_connectivity():
    assert is_connected(generic_bichar([[1, -1], [0, 1]]))
    D = cyclo_bichar(3, [[1, 0], [0, 1]])
    assert not is_connected(D)
    assert components(D) == [[0], [1]]
    chain = generic_bichar([[1, -1, 0], [0, 1, 0], [0, 0, 1]])
    assert components(chain) == [[0, 1], [2]]
