import pytest
from hypothesis import given, settings, strategies as st

from sympairs.boothbywang import (
    INTEGRALITY_NOTE,
    InvalidPairError,
    NotClosedError,
    bw_contact_pair_from_cs,
    bw_contact_symplectic,
    central_extension,
    extension_is_jacobi,
    torus_extension,
)
from sympairs.catalog import catalog_get
from sympairs.exterior import ExteriorForm
from sympairs.lie import ce_d, closed_forms, cohomology_dims, is_closed, is_cohomologous_to_zero

from randalg import algebras4, forms, small

a = lambda *idx: ExteriorForm.basis(4, *idx)
PAIRED = ["abelian4", "nil3xR", "nil4", "sol3xR"]


def test_connection_form_has_curvature_omega():
    g = catalog_get("abelian4").algebra
    ext = central_extension(g, a(1, 2))
    assert ext.fiber_index == 5
    assert ce_d(ext.total, ext.connection) == ExteriorForm.basis(5, 1, 2)
    assert INTEGRALITY_NOTE in ext.assumptions


def test_non_closed_cocycle_rejected():
    g = catalog_get("nil3xR").algebra
    with pytest.raises(NotClosedError):
        central_extension(g, a(3, 4))


@pytest.mark.parametrize("name", PAIRED)
def test_contact_symplectic_from_pair(name):
    e = catalog_get(name)
    res = bw_contact_symplectic(e.algebra, *e.pairs[0])
    assert res.algebra.dim == 5
    assert res.report.verdict, res.report.failed()
    assert res.report.data["k"] == 1 and res.report.data["l"] == 1


@pytest.mark.parametrize("name", PAIRED)
def test_contact_pair_from_contact_symplectic(name):
    e = catalog_get(name)
    first = bw_contact_symplectic(e.algebra, *e.pairs[0])
    second = bw_contact_pair_from_cs(first.algebra, *first.forms)
    assert second.algebra.dim == 6
    assert second.report.verdict, second.report.failed()


@pytest.mark.parametrize("name", PAIRED)
def test_torus_extension_is_the_composite(name):
    e = catalog_get(name)
    first = bw_contact_symplectic(e.algebra, *e.pairs[0])
    second = bw_contact_pair_from_cs(first.algebra, *first.forms)
    torus = torus_extension(e.algebra, *e.pairs[0])
    assert torus.report.verdict
    assert torus.algebra == second.algebra
    assert torus.forms == second.forms


def test_invalid_pair_rejected():
    g = catalog_get("abelian4").algebra
    with pytest.raises(InvalidPairError) as exc:
        bw_contact_symplectic(g, a(1, 2), a(1, 3))
    assert exc.value.report is not None


def test_first_betti_number_of_extension():
    # b1 goes up by one, minus one if the cocycle is exact
    for name in PAIRED:
        e = catalog_get(name)
        w1 = e.pairs[0][0]
        g = e.algebra
        ext = central_extension(g, w1)
        drop = 0 if is_cohomologous_to_zero(g, w1) else 1
        assert cohomology_dims(ext.total)[1] == cohomology_dims(g)[1] + 1 - drop
    abel = catalog_get("abelian4")
    assert cohomology_dims(central_extension(abel.algebra, a(1, 2)).total)[1] == 4


def test_exact_cocycle_keeps_extra_class():
    g = catalog_get("nil3xR").algebra
    ext = central_extension(g, a(1, 2))  # a1^a2 = d a3
    assert cohomology_dims(ext.total)[1] == cohomology_dims(g)[1] + 1


@settings(max_examples=200)
@given(algebras4, forms(4, 2), st.data())
def test_extension_jacobi_iff_cocycle_closed(g, omega, data):
    assert extension_is_jacobi(g, omega) == is_closed(g, omega)
    Z = closed_forms(g, 2)
    coeffs = data.draw(st.lists(small, min_size=len(Z), max_size=len(Z)))
    closed = sum((z * c for z, c in zip(Z, coeffs)), ExteriorForm(4, 2))
    assert extension_is_jacobi(g, closed)
