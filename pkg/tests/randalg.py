"""Random Lie algebras and forms that satisfy Jacobi by construction."""

from fractions import Fraction

from hypothesis import strategies as st

from sympairs.exterior import ExteriorForm, basis_tuples
from sympairs.lie import LieAlgebra

small = st.sampled_from([Fraction(x) for x in (-2, -1, 0, 0, 0, 1, 2)] + [Fraction(1, 2), Fraction(-1, 3)])


def semidirect(A) -> LieAlgebra:
    """R^3 x_A R: ad(e4) acts on span(e1, e2, e3) by A."""
    br = {}
    for i in range(3):
        row = {j + 1: -A[j][i] for j in range(3) if A[j][i] != 0}
        if row:
            br[(i + 1, 4)] = row
    return LieAlgebra(4, br, name="semidirect")


def heis_extension(M, u, v) -> LieAlgebra:
    """heis3 extended by the derivation D with D|span(e1,e2) = M plus e3-components u, v."""
    tr = M[0][0] + M[1][1]
    D = [[M[0][0], M[0][1], 0], [M[1][0], M[1][1], 0], [u, v, tr]]
    br = {(1, 2): {3: Fraction(1)}}
    for i in range(3):
        row = {j + 1: -D[j][i] for j in range(3) if D[j][i] != 0}
        if row:
            br[(i + 1, 4)] = row
    return LieAlgebra(4, br, name="heis-extension")


def rotation_extension(p, q) -> LieAlgebra:
    """R^2 = span(e3, e4) acted on by e1 (scaling by p) and e2 (the matrix [[0, q], [1, 0]])."""
    return LieAlgebra(4, {(1, 3): {3: p}, (1, 4): {4: p}, (2, 3): {4: Fraction(1)}, (2, 4): {3: q}},
                      name="rotation-extension")


matrices3 = st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3)
matrices2 = st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2)

algebras4 = st.one_of(
    matrices3.map(semidirect),
    st.builds(heis_extension, matrices2, small, small),
)

# witnesses here may need a quadratic field, out of reach of the rational oracle
wide_algebras4 = st.one_of(algebras4, st.builds(rotation_extension, small, small))


def forms(dim: int, degree: int):
    idx = basis_tuples(dim, degree)
    return st.lists(small, min_size=len(idx), max_size=len(idx)).map(
        lambda cs: ExteriorForm(dim, degree, list(zip(idx, cs))))
