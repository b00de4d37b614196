import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lissaknot.diagram import Diagram
from lissaknot.errors import BadDeterminant, NotCoprime
from lissaknot.invariants import (
    CanonicalAlexander,
    KnotId,
    alexander,
    alexander_matrix,
    arf,
    artin_action,
    braid_equal,
    identify,
    is_perfect_square,
    is_square_mod2,
    perfect_square_root,
    torus_alexander,
    twist_alexander,
)
from lissaknot.laurent import LaurentPoly
from lissaknot.words import BraidWord

from oracles import burau_alexander_value, closed_braid_diagram, is_unit_ratio, reduced_burau

TREFOIL_GAUSS = ((1, "O", 1), (2, "U", 1), (3, "O", 1), (1, "U", 1), (2, "O", 1), (3, "U", 1))


def test_trefoil_matrix_by_hand():
    d = Diagram(TREFOIL_GAUSS)
    rows = alexander_matrix(d)
    assert len(rows) == 3
    for row in rows:
        # each row of a positive crossing sums to t - 1 + 1 - t = 0
        assert sum(row, LaurentPoly([])) == LaurentPoly([])
    assert alexander(d) == LaurentPoly([1, -1, 1])


def test_canonical_form():
    p = CanonicalAlexander(LaurentPoly([-1, 1, -1], -3))
    assert p.coeff_list == (1, -1, 1)
    assert p.to_json() == {"min_deg": 0, "coeffs": [1, -1, 1]}
    assert CanonicalAlexander.from_json(p.to_json()) == p


def _closing_knot(rng, strands):
    while True:
        length = rng.randint(3, 14)
        letters = tuple(rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length))
        word = BraidWord(strands, letters)
        try:
            return word, closed_braid_diagram(word)
        except ValueError:
            continue


def test_alexander_matches_burau_on_random_closures():
    rng = random.Random(7)
    for _ in range(60):
        word, d = _closing_knot(rng, rng.randint(2, 5))
        delta = alexander(d)
        for t in (2, 3):
            assert is_unit_ratio(delta.evaluate(t), burau_alexander_value(word, t), t)


@pytest.mark.parametrize("p, q", [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7)])
def test_torus_closed_form_against_braid_closure(p, q):
    word = BraidWord(p, tuple(range(1, p)) * q)
    assert alexander(closed_braid_diagram(word)) == torus_alexander(p, q)


def test_torus_closed_form_values():
    assert torus_alexander(2, 3) == LaurentPoly([1, -1, 1])
    assert torus_alexander(3, 4) == LaurentPoly([1, -1, 0, 1, 0, -1, 1])
    with pytest.raises(NotCoprime):
        torus_alexander(2, 4)


def test_twist_closed_form():
    assert twist_alexander(1) == LaurentPoly([1, -3, 1])
    assert twist_alexander(-1) == LaurentPoly([1, -1, 1])
    assert twist_alexander(2) == LaurentPoly([2, -5, 2])


@pytest.mark.parametrize("poly, value", [([1, -1, 1], 1), ([1, -3, 1], 1), ([2, -5, 2], 0), ([1], 0), ([1, -1, 0, 1, 0, -1, 1], 1)])
def test_arf(poly, value):
    assert arf(LaurentPoly(poly)) == value


def test_arf_rejects_even_determinant():
    with pytest.raises(BadDeterminant):
        arf(LaurentPoly([1, -2, 1]) * LaurentPoly([1, 1]))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4).filter(lambda c: c[0] != 0 and c[-1] != 0))
def test_squares_are_detected(coeffs):
    g = LaurentPoly(coeffs)
    sq = g * g
    assert is_perfect_square(sq)
    root = perfect_square_root(sq)
    assert root * root == sq.canonical()
    assert is_square_mod2(sq)


def test_non_squares():
    assert not is_perfect_square(LaurentPoly([1, -1, 1]))
    assert not is_perfect_square(LaurentPoly([2, -5, 2]))
    assert not is_square_mod2(LaurentPoly([1, -1, 1]))
    assert is_square_mod2(LaurentPoly([1, 0, 1]))


def test_identify():
    assert identify(LaurentPoly([1])) == [KnotId.unknot()]
    assert [str(k) for k in identify(LaurentPoly([2, -5, 2]))] == ["Twist(4)", "Twist(-5)"]
    trefoil = [str(k) for k in identify(LaurentPoly([1, -1, 1]))]
    assert trefoil == ["Twist(1)", "Twist(-2)", "Torus(2,3)"]
    assert identify(LaurentPoly([5, 1, 5])) == []


def test_braid_relations():
    assert braid_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert braid_equal(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))
    assert braid_equal(BraidWord(3, (1, -1)), BraidWord(3, ()))
    assert not braid_equal(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))
    with pytest.raises(ValueError):
        braid_equal(BraidWord(3, ()), BraidWord(4, ()))


def test_artin_action_of_generator():
    assert artin_action(BraidWord(2, (1,))) == ((1, 2, -1), (1,))
    assert artin_action(BraidWord(2, (-1,))) == ((2,), (-2, 1, 2))


_RELATIONS = [((1, 2, 1), (2, 1, 2)), ((2, 3, 2), (3, 2, 3)), ((1, 3), (3, 1)), ((1, -1), ()), ((-2, 2), ())]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=8), st.integers(0, 8), st.sampled_from(_RELATIONS))
def test_relation_rewrites_are_equal(letters, pos, rel):
    pos = min(pos, len(letters))
    a = BraidWord(4, tuple(letters[:pos]) + rel[0] + tuple(letters[pos:]))
    b = BraidWord(4, tuple(letters[:pos]) + rel[1] + tuple(letters[pos:]))
    assert braid_equal(a, b)
    assert reduced_burau(a, 3) == reduced_burau(b, 3)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=7), st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=7))
def test_burau_difference_implies_inequality(u, v):
    a, b = BraidWord(4, tuple(u)), BraidWord(4, tuple(v))
    if reduced_burau(a, 3) != reduced_burau(b, 3):
        assert not braid_equal(a, b)
    if braid_equal(a, b):
        assert reduced_burau(a, 2) == reduced_burau(b, 2)
