import pytest

from conftest import cyclo_bichar, generic_bichar
from nicholsdiag.weyl import generate_groupoid, is_arithmetic_root_system, reflect, standard_basis

# Cartan types at a generic parameter: states = |W|, |Delta| = number of roots
CARTAN = {
    "A2": ([[1, -1], [0, 1]], 6, 6),
    "B2": ([[1, -2], [0, 2]], 8, 8),
    "G2": ([[1, -3], [0, 3]], 12, 12),
    "A3": ([[1, -1, 0], [0, 1, -1], [0, 0, 1]], 24, 12),
    "A1xA1": ([[1, 0], [0, 1]], 4, 4),
}


def test_reflect_example(a2_generic):
    assert reflect(a2_generic, standard_basis(2), 0) == ((-1, 0), (1, 1))


@pytest.mark.parametrize("name", sorted(CARTAN))
def test_cartan_types(name):
    rows, states, roots = CARTAN[name]
    G = generate_groupoid(generic_bichar(rows))
    assert G.full and G.finite and not G.truncated
    assert len(G.states) == states
    assert len(G.roots) == roots


def test_positive_roots():
    G = generate_groupoid(generic_bichar(CARTAN["B2"][0]))
    assert G.positive_roots == [(1, 0), (0, 1), (1, 1), (2, 1)]
    G = generate_groupoid(generic_bichar(CARTAN["G2"][0]))
    assert G.positive_roots == [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]


def test_rank_one():
    G = generate_groupoid(cyclo_bichar(5, [[1]]))
    assert G.states == [((1,),), ((-1,),)]
    v = is_arithmetic_root_system(cyclo_bichar(5, [[1]]))
    assert v.status == "yes" and v.roots == {(1,), (-1,)}


def test_undefined_reflection(p11_one):
    G = generate_groupoid(p11_one)
    assert not G.full
    assert (0, 0) in G.undefined
    assert is_arithmetic_root_system(p11_one).status == "no"
    assert is_arithmetic_root_system(p11_one).roots is None


def test_cap_gives_unknown():
    v = is_arithmetic_root_system(generic_bichar(CARTAN["A3"][0]), cap=5)
    assert v.status == "unknown"
    assert v.graph.truncated and len(v.graph.states) == 5
    with pytest.raises(ValueError):
        generate_groupoid(generic_bichar(CARTAN["A2"][0]), cap_states=0)


def test_adjacency_text(a2_generic):
    text = generate_groupoid(a2_generic).adjacency_text()
    lines = text.splitlines()
    assert lines[0] == "# state 0: (1,0) (0,1)"
    assert "0 1 1" in lines


@pytest.mark.parametrize("rows,N", [
    (CARTAN["A2"][0], None), (CARTAN["B2"][0], None), (CARTAN["G2"][0], None),
    ([[1, 2], [0, 1]], 3), ([[3, 2], [0, 1]], 6), ([[0, 1], [0, 1]], 2),
])
def test_reflections_are_involutions(rows, N):
    B = generic_bichar(rows) if N is None else cyclo_bichar(N, rows)
    G = generate_groupoid(B)
    for F in G.states:
        for k in range(B.n):
            R = reflect(B, F, k)
            if R is not None:
                assert reflect(B, R, k) == F
