from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sympairs.coordforms import (
    Poly,
    PolyForm,
    PolyMap,
    check_coordinate_pair,
    compose,
    default_samples,
    format_poly,
    generic_rank,
    invariance_check,
    nil3_infranil_pair,
    pd,
    pullback,
    pwedge,
    sol3_pair,
)

x, y, z, t = (Poly.var(4, i) for i in range(1, 5))
dx = lambda *idx, c=1: PolyForm.basis(4, *idx, coeff=c)


def test_poly_arithmetic():
    p = (x + 1) * (x - 1)
    assert p == x * x - 1
    assert p.diff(1) == x * 2
    assert p((2, 0, 0, 0)) == 3
    assert format_poly(x * y * 3 - 1) == "-1 + 3*x*y"


def test_pd_hand_values():
    # d(x dy) = dx^dy
    assert pd(dx(2, c=x)) == dx(1, 2)
    # d(x^2 y) = 2xy dx + x^2 dy
    f = PolyForm.function(x * x * y)
    assert pd(f) == dx(1, c=x * y * 2) + dx(2, c=x * x)


def test_pwedge():
    assert pwedge(dx(1, 2), dx(3, 4)) == PolyForm.volume(4)
    assert pwedge(dx(1, c=x), dx(1)).is_zero()


def test_nil3_coordinate_pair():
    w1, w2 = nil3_infranil_pair()
    r = check_coordinate_pair(w1, w2)
    assert r["closed"] == [True, True]
    assert r["square_zero"] == [True, True]
    assert r["volume_multiple"] == "-1"
    assert r["samples"] == 625
    assert r["ranks"] == [[2], [2]]
    assert r["pointwise_pair"]


def test_sol3_coordinate_pair():
    r = check_coordinate_pair(*sol3_pair())
    assert r["volume_multiple"] == "1"
    assert r["ranks"] == [[2], [2]] and r["pointwise_pair"]


def test_generic_rank_certificate():
    w1, w2 = nil3_infranil_pair()
    r = generic_rank(w2)
    assert r["constant_rank_2_certified"]
    assert r["nonvanishing_certificate"] == [1, 3]
    bad = generic_rank(dx(1, 2, c=x))
    assert bad["min_rank"] == 0 and not bad["constant_rank_2_certified"]


def test_shear_invariance():
    w1, w2 = nil3_infranil_pair()
    shift_y = PolyMap.affine([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], [0, 1, 0, 0])
    shift_t = PolyMap([x, y, z, t + 1])
    assert invariance_check(w1, [shift_y, shift_t]) == [True, True]
    assert invariance_check(w2, [shift_y, shift_t]) == [True, True]
    shift_x = PolyMap([x + 1, y, z, t])
    assert invariance_check(w2, [shift_x]) == [False]
    # compensated x-translation: z -> z + y
    comp = PolyMap([x + 1, y, z + y, t])
    assert invariance_check(w2, [comp]) == [True]


def test_pullback_and_compose():
    f = PolyMap([x * 2, y, z, t])
    g = PolyMap([x + 1, y, z, t])
    assert pullback(f, dx(1)) == dx(1, c=2)
    assert compose(g, f)((1, 0, 0, 0)) == [3, 0, 0, 0]
    assert pullback(compose(g, f), dx(1, 2, c=x)) == pullback(f, pullback(g, dx(1, 2, c=x)))


def test_default_grid():
    pts = default_samples()
    assert len(pts) == 625 and (Fraction(-1, 2),) * 4 in pts


coeffs = st.integers(-2, 2)
polys = st.lists(st.tuples(st.tuples(*[st.integers(0, 2)] * 4), coeffs), max_size=3).map(lambda ts: Poly(4, ts))


@st.composite
def polyforms(draw, degree):
    from itertools import combinations
    return PolyForm(4, degree, [(idx, draw(polys)) for idx in combinations(range(1, 5), degree)])


@settings(max_examples=100, deadline=None)
@given(polyforms(1))
def test_pd_squared_zero(phi):
    assert pd(pd(phi)).is_zero()


@settings(max_examples=50, deadline=None)
@given(polyforms(1), polyforms(1))
def test_pd_leibniz(a, b):
    assert pd(pwedge(a, b)) == pwedge(pd(a), b) - pwedge(a, pd(b))


@settings(max_examples=50, deadline=None)
@given(polyforms(1), st.lists(coeffs, min_size=4, max_size=4))
def test_pullback_commutes_with_d(phi, shift):
    f = PolyMap([x + shift[0], y * 2 + x * shift[1], z + x * y * shift[2], t - shift[3]])
    assert pullback(f, pd(phi)) == pd(pullback(f, phi))
