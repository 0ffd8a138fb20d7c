"""Lie algebras given by structure constants, and their Chevalley-Eilenberg complex.

Convention: ``[e_i, e_j] = sum_k c[i, j][k] e_k`` and, on 1-forms,
``(d a)(x, y) = -a([x, y])``.  So ``d a_k = -sum_{i<j} c_ij^k a_i ^ a_j``
and ``[e1, e4] = -e1`` is what produces ``d a1 = a1 ^ a4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Mapping

from . import linalg
from .exterior import ExteriorForm, basis_tuples, wedge
from .scalar import simplify


class JacobiError(ValueError):
    def __init__(self, triple, residual):
        self.triple = triple
        self.residual = residual
        super().__init__(f"Jacobi identity fails at {triple}: residual {residual}")


@dataclass(frozen=True)
class JacobiVerdict:
    ok: bool
    triple: tuple | None = None
    residual: tuple | None = None

    def __bool__(self):
        return self.ok


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q (or Q(sqrt d)).

    ``brackets`` maps ``(i, j)`` with ``i < j`` (1-based) to ``{k: c}``.
    Pairs given as ``(j, i)`` are antisymmetrised on the way in.  Unless
    ``check=False`` the Jacobi identity is verified and :class:`JacobiError`
    raised on failure.
    """

    def __init__(self, dim: int, brackets: Mapping | None = None, name: str = "", check: bool = True):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        table: dict[tuple[int, int], dict[int, object]] = {}
        for (i, j), out in (brackets or {}).items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ValueError(f"bracket index ({i}, {j}) outside 1..{dim}")
            if i == j:
                if any(simplify(c) != 0 for c in out.values()):
                    raise ValueError(f"[e{i}, e{i}] must vanish")
                continue
            sgn = 1 if i < j else -1
            key = (min(i, j), max(i, j))
            row = table.setdefault(key, {})
            for k, c in out.items():
                if not 1 <= int(k) <= dim:
                    raise ValueError(f"bracket output index {k} outside 1..{dim}")
                row[int(k)] = row.get(int(k), Fraction(0)) + sgn * simplify(c)
        self.dim = dim
        self.name = name
        self.brackets = {
            key: {k: v for k, v in sorted(row.items()) if v != 0}
            for key, row in sorted(table.items())
        }
        self.brackets = {k: v for k, v in self.brackets.items() if v}
        if check:
            verdict = jacobi_check(self)
            if not verdict:
                raise JacobiError(verdict.triple, verdict.residual)

    def c(self, i: int, j: int, k: int):
        """Structure constant c_ij^k."""
        if i == j:
            return Fraction(0)
        if i < j:
            return self.brackets.get((i, j), {}).get(k, Fraction(0))
        return -self.brackets.get((j, i), {}).get(k, Fraction(0))

    def bracket_basis(self, i: int, j: int) -> list:
        return [self.c(i, j, k) for k in range(1, self.dim + 1)]

    def bracket(self, x, y) -> list:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(1, n + 1):
            if x[i - 1] == 0:
                continue
            for j in range(1, n + 1):
                if y[j - 1] == 0 or i == j:
                    continue
                f = x[i - 1] * y[j - 1]
                for k, c in self._row(i, j).items():
                    out[k - 1] = simplify(out[k - 1] + f * c)
        return out

    def _row(self, i, j) -> dict:
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -v for k, v in self.brackets.get((j, i), {}).items()}

    def ad_trace(self, i: int):
        return sum((self.c(i, j, j) for j in range(1, self.dim + 1)), Fraction(0))

    @cached_property
    def is_unimodular(self) -> bool:
        return all(self.ad_trace(i) == 0 for i in range(1, self.dim + 1))

    @cached_property
    def d1(self) -> tuple:
        """``d a_k`` for k = 1..n."""
        out = []
        for k in range(1, self.dim + 1):
            terms = [((i, j), -row[k]) for (i, j), row in self.brackets.items() if k in row]
            out.append(ExteriorForm(self.dim, 2, terms))
        return tuple(out)

    def one_form(self, k: int) -> ExteriorForm:
        return ExteriorForm.basis(self.dim, k)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.brackets == other.brackets

    def __hash__(self):
        return hash((self.dim, tuple((k, tuple(v.items())) for k, v in self.brackets.items())))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, name={self.name!r}, brackets={len(self.brackets)})"


def jacobi_check(g: LieAlgebra) -> JacobiVerdict:
    """Cyclic sum [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] over i<j<k."""
    n = g.dim
    basis = [[Fraction(int(a == b)) for a in range(n)] for b in range(n)]
    for i, j, k in combinations(range(1, n + 1), 3):
        ei, ej, ek = basis[i - 1], basis[j - 1], basis[k - 1]
        terms = (
            g.bracket(g.bracket(ei, ej), ek),
            g.bracket(g.bracket(ej, ek), ei),
            g.bracket(g.bracket(ek, ei), ej),
        )
        res = [simplify(a + b + c) for a, b, c in zip(*terms)]
        if any(x != 0 for x in res):
            return JacobiVerdict(False, (i, j, k), tuple(res))
    return JacobiVerdict(True)


def ce_d(g: LieAlgebra, phi: ExteriorForm) -> ExteriorForm:
    """Chevalley-Eilenberg differential, extended as an antiderivation."""
    if phi.dim != g.dim:
        raise ValueError(f"form lives in dimension {phi.dim}, algebra in {g.dim}")
    n, p = g.dim, phi.degree
    if p >= n:
        return ExteriorForm(n, p + 1)
    d1 = g.d1
    out = []
    for idx, c in phi.terms.items():
        for pos, i in enumerate(idx):
            da = d1[i - 1]
            if da.is_zero():
                continue
            sgn = -c if pos % 2 else c
            for (a, b), v in da.terms.items():
                new = idx[:pos] + (a, b) + idx[pos + 1:]
                out.append((new, sgn * v))
    return ExteriorForm(n, p + 1, out)


def d_matrix(g: LieAlgebra, p: int) -> list[list]:
    """Matrix of d: Lambda^p -> Lambda^(p+1) in lexicographic bases (columns = inputs)."""
    n = g.dim
    src = basis_tuples(n, p)
    cols = [ce_d(g, ExteriorForm.basis(n, *t)).to_vector() for t in src]
    nrows = len(basis_tuples(n, p + 1)) if p + 1 <= n else 0
    if not cols or nrows == 0:
        return [[] for _ in range(nrows)]
    return linalg.transpose(cols)


def closed_forms(g: LieAlgebra, p: int) -> list[ExteriorForm]:
    """Echelon basis of Z^p = ker(d on p-forms)."""
    n = g.dim
    if not 0 <= p <= n:
        raise ValueError(f"degree {p} outside 0..{n}")
    m = d_matrix(g, p)
    ncols = len(basis_tuples(n, p))
    if not m or not m[0]:
        vecs = [[Fraction(int(a == b)) for a in range(ncols)] for b in range(ncols)]
    else:
        vecs = linalg.nullspace(m, ncols)
        # echelon order on the form side
        vecs, _ = linalg.rref(vecs) if vecs else ([], [])
    return [ExteriorForm.from_vector(n, p, v) for v in vecs]


def exact_forms(g: LieAlgebra, p: int) -> list[ExteriorForm]:
    """Echelon basis of B^p = d(Lambda^(p-1))."""
    n = g.dim
    if p == 0:
        return []
    images = [ce_d(g, ExteriorForm.basis(n, *t)).to_vector() for t in basis_tuples(n, p - 1)]
    red, _ = linalg.rref(images) if images else ([], [])
    return [ExteriorForm.from_vector(n, p, v) for v in red]


def cohomology_dims(g: LieAlgebra) -> list[int]:
    n = g.dim
    ranks = []
    for p in range(n + 1):
        m = d_matrix(g, p)
        ranks.append(linalg.rank(m) if m and m[0] else 0)
    betti = []
    for p in range(n + 1):
        dim_p = len(basis_tuples(n, p))
        ker = dim_p - ranks[p]
        im = ranks[p - 1] if p > 0 else 0
        betti.append(ker - im)
    if g.is_unimodular:
        assert betti == betti[::-1], "Poincare duality fails on a unimodular algebra"
    return betti


def is_cohomologous_to_zero(g: LieAlgebra, phi: ExteriorForm) -> bool:
    exact = exact_forms(g, phi.degree)
    rows = [e.to_vector() for e in exact]
    return linalg.rank(rows + [phi.to_vector()]) == len(rows)


def direct_sum(g: LieAlgebra, h: LieAlgebra, name: str = "") -> LieAlgebra:
    """g + h with h's basis shifted by dim g."""
    off = g.dim
    br = {k: dict(v) for k, v in g.brackets.items()}
    for (i, j), row in h.brackets.items():
        br[(i + off, j + off)] = {k + off: c for k, c in row.items()}
    return LieAlgebra(g.dim + h.dim, br, name=name or f"{g.name}+{h.name}", check=False)


def from_differentials(dim: int, differentials: Mapping[int, ExteriorForm], name: str = "", check: bool = True) -> LieAlgebra:
    """Build the algebra whose CE differential on a_k is ``differentials[k]``.

    Structure equations are the way the model geometries are usually quoted
    (``d a1 = a1 ^ a4``); unspecified a_k are closed.
    """
    br: dict[tuple[int, int], dict[int, object]] = {}
    for k, form in differentials.items():
        if form.degree != 2 or form.dim != dim:
            raise ValueError(f"d a{k} must be a 2-form in dimension {dim}")
        for (i, j), v in form.terms.items():
            br.setdefault((i, j), {})[k] = -v
    return LieAlgebra(dim, br, name=name, check=check)


def is_closed(g: LieAlgebra, phi: ExteriorForm) -> bool:
    return ce_d(g, phi).is_zero()


def wedge_is_antiderivation(g: LieAlgebra, phi: ExteriorForm, psi: ExteriorForm) -> bool:
    lhs = ce_d(g, wedge(phi, psi))
    rhs = wedge(ce_d(g, phi), psi) + (-1) ** phi.degree * wedge(phi, ce_d(g, psi))
    return lhs == rhs
