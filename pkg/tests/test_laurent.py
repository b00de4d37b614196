import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lissaknot.laurent import ONE, T, ZERO_POLY, LaurentPoly, determinant
from oracles import fraction_det

polys = st.builds(
    LaurentPoly,
    st.lists(st.integers(-9, 9), max_size=6),
    st.integers(-4, 4),
)


def test_basic_arithmetic():
    p = LaurentPoly([1, -1, 1])
    assert str(p) == "1 - t + t^2"
    assert (T - 1) * (T + 1) == T ** 2 - 1
    assert p.evaluate(-1) == 3
    assert LaurentPoly({-2: 3, 1: 1}).min_degree == -2
    assert (T ** -2) * T ** 2 == ONE


def test_canonical_form():
    p = LaurentPoly([-2, 5, -2], low=-1)
    assert p.canonical() == LaurentPoly([2, -5, 2])
    assert ZERO_POLY.canonical() == ZERO_POLY


def test_divexact():
    num = (T ** 6 - 1) * (T - 1)
    den = (T ** 2 - 1) * (T ** 3 - 1)
    assert num.divexact(den) == LaurentPoly([1, -1, 1])
    with pytest.raises(ArithmeticError):
        (T ** 2 + 1).divexact(T + 1)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO_POLY


@given(polys, polys)
def test_divexact_inverts_product(a, b):
    if b.is_zero():
        return
    assert (a * b).divexact(b) == a


@given(polys)
def test_invert_variable_and_canonical(a):
    assert a.invert_variable().invert_variable() == a
    assert a.canonical().canonical() == a.canonical()
    assert a.evaluate(2) == Fraction(a.invert_variable().evaluate(Fraction(1, 2)))


def _random_matrix(rng, n):
    return [[LaurentPoly([rng.randint(-2, 2) for _ in range(rng.randint(0, 3))], rng.randint(-1, 1))
             for _ in range(n)] for _ in range(n)]


@pytest.mark.parametrize("seed", range(25))
def test_determinant_matches_pointwise_elimination(seed):
    # oracle: evaluate entries at integer t and eliminate over the rationals
    rng = random.Random(seed)
    m = _random_matrix(rng, rng.randint(1, 6))
    det = determinant(m)
    for t in (2, 3, -2):
        assert Fraction(det.evaluate(t)) == fraction_det([[e.evaluate(t) for e in row] for row in m])


def test_determinant_of_unit_heavy_matrix():
    # alexander-style rows: one unit pivot per row
    m = [[T, -ONE, ONE - T], [ONE - T, T, -ONE], [-ONE, ONE - T, T]]
    assert determinant(m) == ZERO_POLY
    minor = [row[:2] for row in m[:2]]
    assert determinant(minor).canonical() == LaurentPoly([1, -1, 1])


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_is_multiplicative(a, b):
    pa = [[LaurentPoly([x, 1]) for x in row] for row in a]
    pb = [[LaurentPoly([1, y]) for y in row] for row in b]
    prod = [[sum((pa[i][k] * pb[k][j] for k in range(3)), ZERO_POLY) for j in range(3)] for i in range(3)]
    assert determinant(prod) == determinant(pa) * determinant(pb)
