from fractions import Fraction

import pytest
from hypothesis import given, settings

from sympairs.catalog import NAMES, SOL_MN_SAMPLES, catalog_get
from sympairs.exterior import ExteriorForm, basis_tuples
from sympairs.lie import (
    JacobiError,
    LieAlgebra,
    ce_d,
    closed_forms,
    cohomology_dims,
    direct_sum,
    exact_forms,
    from_differentials,
    is_cohomologous_to_zero,
    jacobi_check,
    wedge_is_antiderivation,
)

from randalg import algebras4, forms

a = lambda *idx: ExteriorForm.basis(4, *idx)


def test_sign_convention():
    # [e1, e4] = -e1 gives d a1 = a1 ^ a4
    g = LieAlgebra(4, {(1, 4): {1: -1}})
    assert ce_d(g, a(1)) == a(1, 4)
    assert g.c(4, 1, 1) == 1


def test_reversed_keys_are_antisymmetrised():
    g = LieAlgebra(3, {(2, 1): {3: 1}})
    assert g.brackets == {(1, 2): {3: -1}}


def test_jacobi_failure_is_reported():
    # [e1,e2]=e3, [e1,e3]=e1 is not a Lie algebra
    br = {(1, 2): {3: 1}, (1, 3): {1: 1}}
    with pytest.raises(JacobiError) as exc:
        LieAlgebra(3, br)
    assert exc.value.triple == (1, 2, 3)
    assert not jacobi_check(LieAlgebra(3, br, check=False))


def test_bad_indices():
    with pytest.raises(ValueError):
        LieAlgebra(3, {(1, 4): {1: 1}})
    with pytest.raises(ValueError):
        LieAlgebra(3, {(1, 2): {7: 1}})


def test_betti_numbers_of_model_algebras():
    assert cohomology_dims(catalog_get("abelian4").algebra) == [1, 4, 6, 4, 1]
    assert cohomology_dims(catalog_get("nil3xR").algebra) == [1, 3, 4, 3, 1]
    assert cohomology_dims(catalog_get("nil4").algebra) == [1, 2, 2, 2, 1]
    assert cohomology_dims(catalog_get("sol3xR").algebra) == [1, 2, 2, 2, 1]
    assert cohomology_dims(catalog_get("heis3").algebra) == [1, 2, 2, 1]


def test_closed_and_exact_forms():
    g = catalog_get("nil3xR").algebra
    assert len(closed_forms(g, 2)) == 5
    assert exact_forms(g, 2) == [a(1, 2)]
    assert is_cohomologous_to_zero(g, a(1, 2) * 3)
    assert not is_cohomologous_to_zero(g, a(1, 3))


def test_from_differentials_round_trip():
    g = from_differentials(4, {1: a(1, 4), 3: a(4, 3)})
    assert g == catalog_get("sol3xR").algebra


def test_direct_sum_shifts_indices():
    h = catalog_get("heis3").algebra
    hh = direct_sum(h, h)
    assert hh.brackets == {(1, 2): {3: -1}, (4, 5): {6: -1}}


def test_unimodularity():
    assert catalog_get("sol3xR").algebra.is_unimodular
    assert not LieAlgebra(2, {(1, 2): {2: 1}}).is_unimodular


@pytest.mark.parametrize("name", NAMES)
def test_catalog_d_squared_on_basis(name):
    g = catalog_get(name).algebra
    for p in range(g.dim - 1):
        for t in basis_tuples(g.dim, p):
            assert ce_d(g, ce_d(g, ExteriorForm.basis(g.dim, *t))).is_zero()


@settings(max_examples=200)
@given(algebras4, forms(4, 1), forms(4, 2))
def test_ce_differential_random(g, x, w):
    assert ce_d(g, ce_d(g, x)).is_zero()
    assert ce_d(g, ce_d(g, w)).is_zero()
    assert wedge_is_antiderivation(g, x, w)


@settings(max_examples=50)
@given(algebras4)
def test_poincare_duality_when_unimodular(g):
    b = cohomology_dims(g)  # asserts duality internally for unimodular g
    assert b[0] == 1
    if g.is_unimodular:
        assert b[4] == 1
    else:
        assert b[4] == 0


def test_sol_mn_samples_are_valid():
    for params in SOL_MN_SAMPLES:
        g = catalog_get("sol_mn", *params).algebra
        assert g.is_unimodular
        assert sum(Fraction(p) for p in params) == 0
