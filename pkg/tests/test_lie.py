import random

import pytest

from conftest import cyclo_bichar, generic_bichar
from nicholsdiag.balgebra import BRAIDED, MINUS, Element, is_zero_nichols, letter, pairing
from nicholsdiag.identities import random_bicharacter
from nicholsdiag.lattice import Bicharacter
from nicholsdiag.lie import bracket_pairing_checks, infinite_witness, iterated_bracket, lie_dims
from nicholsdiag.linalg import rank
from nicholsdiag.nichols import graded_component
from nicholsdiag.scalars import CycloContext


def test_iterated_bracket_examples(a2_generic):
    B = a2_generic
    one = B.ctx.one
    assert iterated_bracket(B, 0, 1, 0) == letter(B, 1)
    assert iterated_bracket(B, 0, 1, 1) == Element({(0, 1): one, (1, 0): -one})
    assert iterated_bracket(B, 0, 1, 2) == Element({(0, 0, 1): one, (0, 1, 0): -2 * one, (1, 0, 0): one})
    with pytest.raises(ValueError):
        iterated_bracket(B, 1, 1, 2)


def test_bracket_pairing_on_generic_parameters():
    ctx = CycloContext(1, ("a", "b", "c", "d"))
    a, b, c, d = (ctx.param(s) for s in "abcd")
    B = Bicharacter(ctx, [[a, b], [c, d]])
    rows = bracket_pairing_checks(B, 0, 1, 4)
    assert [r.m for r in rows] == [1, 2, 3, 4]
    assert all(r.ok for r in rows)
    with pytest.raises(ValueError):
        bracket_pairing_checks(B, 0, 0, 2)


def test_bracket_pairing_coefficient_at_a_equal_one():
    # a = 1: <y_1^2, l^2> = 2 (1-b)^2 x_2
    B = cyclo_bichar(5, [[0, 2], [1, 3]])

    b = B.qinv[0][1]
    assert pairing(B, (0, 0), iterated_bracket(B, 0, 1, 2)) == letter(B, 1).scale(2 * (1 - b) ** 2)
    assert all(r.ok for r in bracket_pairing_checks(B, 0, 1, 3))


def test_bracket_pairing_vanishes_when_b_is_one():
    B = cyclo_bichar(4, [[1, 0], [2, 3]])
    for m in range(1, 4):
        assert not pairing(B, (0,) * m, iterated_bracket(B, 0, 1, m))


@pytest.mark.parametrize("seed", range(5))
def test_bracket_pairing_random(seed):
    rng = random.Random(seed)
    for ctx in (CycloContext(6), CycloContext(1, ("q",))):
        B = random_bicharacter(ctx, 2, rng)
        assert all(r.ok for r in bracket_pairing_checks(B, 0, 1, 4))
        assert all(r.ok for r in bracket_pairing_checks(B, 1, 0, 4))


def test_part_i_trivial_braiding_kills_brackets():
    B = cyclo_bichar(5, [[2, 0], [0, 3]])
    for m in range(1, 4):
        assert is_zero_nichols(B, iterated_bracket(B, 0, 1, m))


def test_lie_dims_rank_one():
    B = cyclo_bichar(3, [[1]])
    assert lie_dims(B, MINUS, 4).dims == {1: 1}
    span = lie_dims(B, BRAIDED, 4)
    assert span.dims == {1: 1, 2: 1} and span.saturated
    # p11 = 1: [x1, x1] = 0 for both brackets
    assert lie_dims(cyclo_bichar(1, [[0]]), BRAIDED, 5).dims == {1: 1}
    with pytest.raises(ValueError):
        lie_dims(B, MINUS, 0)
    with pytest.raises(ValueError):
        lie_dims(B, "plain", 3)


def test_lie_dims_a2_zeta3(a2_zeta3):
    span = lie_dims(a2_zeta3, BRAIDED, 9)
    assert span.saturated and span.total == 26
    assert span.dims_list() == [2, 4, 4, 5, 4, 4, 2, 1, 0]
    minus = lie_dims(a2_zeta3, MINUS, 9)
    assert minus.saturated and minus.dims_list() == [2, 1, 2, 3, 4, 4, 2, 1, 0]
    assert not lie_dims(a2_zeta3, MINUS, 8).saturated


def test_lie_dims_grows_on_witness(p11_one):
    span = lie_dims(p11_one, MINUS, 8)
    assert not span.saturated
    assert all(k > 0 for k in span.dims_list())


def test_lie_elements_independent(a2_zeta3):
    span = lie_dims(a2_zeta3, MINUS, 6)
    for mu, elems in span.by_multidegree.items():
        comp = graded_component(a2_zeta3, mu)
        assert rank([comp.coords(e) for e in elems]) == len(elems)


def test_infinite_witness():
    w = infinite_witness(cyclo_bichar(3, [[0, 1], [0, 1]]))
    assert (w.i, w.j) == (0, 1) and "ord(p_11^-1) = 1" in w.reason
    w = infinite_witness(generic_bichar([[1, -1], [0, 1]]))
    assert (w.i, w.j) == (0, 1) and "infinite" in w.reason
    assert infinite_witness(cyclo_bichar(3, [[1, 2], [0, 1]])) is None
    with pytest.raises(ValueError):
        infinite_witness(cyclo_bichar(3, [[1]]))
