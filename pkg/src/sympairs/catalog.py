"""Built-in Lie algebras of the four-dimensional model geometries.

Each entry is written as structure equations ``d a_k = ...``.  Entries whose
equations are printed with the pair they carry are tagged ``published``; the
solvable algebras whose constants had to be supplied here are tagged
``implementer-sourced`` and use the usual derivation-type presentations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import ExteriorForm
from .lie import LieAlgebra, direct_sum, from_differentials


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    pairs: tuple = ()
    provenance: str = "standard"
    description: str = ""
    params: tuple = field(default=())


def _a(n, *idx, c=1):
    return ExteriorForm.basis(n, *idx, coeff=c)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, name=f"abelian{n}")


def heis3() -> LieAlgebra:
    return from_differentials(3, {3: _a(3, 1, 2)}, name="heis3")


def nil3xR() -> LieAlgebra:
    return from_differentials(4, {3: _a(4, 1, 2)}, name="nil3xR")


def nil4() -> LieAlgebra:
    return from_differentials(4, {2: _a(4, 1, 4), 3: _a(4, 2, 4)}, name="nil4")


def sol3xR() -> LieAlgebra:
    return from_differentials(4, {1: _a(4, 1, 4), 3: _a(4, 4, 3)}, name="sol3xR")


def sl2xR() -> LieAlgebra:
    # [e1,e2] = 2 e2, [e1,e3] = -2 e3, [e2,e3] = e1, e4 central
    return LieAlgebra(4, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}}, name="sl2xR")


def diagonal_solvable(eigenvalues, name: str = "") -> LieAlgebra:
    """R^3 extended by the derivation diag(eigenvalues): ``d a_i = l_i a_i ^ a4``."""
    lam = [Fraction(x) for x in eigenvalues]
    if len(lam) != 3:
        raise ValueError("need three eigenvalues")
    return from_differentials(4, {i + 1: _a(4, i + 1, 4, c=l) for i, l in enumerate(lam) if l != 0}, name=name)


def sol_mn(a, b, c) -> LieAlgebra:
    lam = [Fraction(a), Fraction(b), Fraction(c)]
    if sum(lam) != 0:
        raise ValueError("sol_mn eigenvalues must sum to zero")
    if any(lam[i] + lam[j] == 0 for i, j in ((0, 1), (0, 2), (1, 2))):
        raise ValueError("sol_mn eigenvalues need pairwise non-zero sums")
    return diagonal_solvable(lam, name=f"sol_mn({','.join(str(x) for x in lam)})")


def sol4_0() -> LieAlgebra:
    # repeated eigenvalue: diag(1, 1, -2)
    return diagonal_solvable((1, 1, -2), name="sol4_0")


def sol4_1() -> LieAlgebra:
    # heisenberg algebra extended by the derivation diag(1, -1, 0)
    return from_differentials(
        4, {1: _a(4, 1, 4), 2: _a(4, 2, 4, c=-1), 3: _a(4, 1, 2)}, name="sol4_1"
    )


def _pair(n, i, j, k, l):
    return (_a(n, i, j), _a(n, k, l))


def _entries():
    h = heis3()
    return {
        "abelian4": CatalogEntry("abelian4", abelian(4), (_pair(4, 1, 2, 3, 4),), "standard",
                                 "R^4, the product of two planes"),
        "nil3xR": CatalogEntry("nil3xR", nil3xR(), (_pair(4, 1, 3, 2, 4),), "published",
                               "Nil^3 x R: d a3 = a1^a2"),
        "nil4": CatalogEntry("nil4", nil4(), (_pair(4, 1, 2, 3, 4),), "published",
                             "Nil^4: d a2 = a1^a4, d a3 = a2^a4"),
        "sol3xR": CatalogEntry("sol3xR", sol3xR(), (_pair(4, 1, 3, 2, 4),), "published",
                               "Sol^3 x R: d a1 = a1^a4, d a3 = a4^a3"),
        "sl2xR": CatalogEntry("sl2xR", sl2xR(), (), "implementer-sourced",
                              "sl(2,R) + R, Lie algebra of the universal cover of PSL(2,R) times R"),
        "sol4_0": CatalogEntry("sol4_0", sol4_0(), (), "implementer-sourced",
                               "R^3 extended by diag(1,1,-2)"),
        "sol4_1": CatalogEntry("sol4_1", sol4_1(), (), "implementer-sourced",
                               "heisenberg algebra extended by diag(1,-1,0)"),
        "heis3": CatalogEntry("heis3", h, (), "standard", "3-dim heisenberg: d a3 = a1^a2"),
        "heis3xheis3": CatalogEntry("heis3xheis3", direct_sum(h, h, name="heis3xheis3"), (), "standard",
                                    "two copies of heis3, contact duals a3 and a6"),
    }


_ABELIAN_RE = re.compile(r"^abelian(\d+)$")
_SOLMN_RE = re.compile(r"^sol_mn\((.+)\)$")

#: the entries every test and the reproduce command iterate over
NAMES = ("abelian4", "nil3xR", "nil4", "sol3xR", "sl2xR", "sol4_0", "sol4_1", "heis3", "heis3xheis3")

#: representatives of distinct genericity strata for Sol_{m,n}, m != n
SOL_MN_SAMPLES = ((1, 2, -3), (2, 3, -5), (1, 3, -4), (Fraction(1, 2), Fraction(-3, 2), 1), (3, 4, -7), (5, -2, -3))


def catalog_get(name: str, *params) -> CatalogEntry:
    """Look up a catalog entry.

    ``abelianN`` (N even or odd) and ``sol_mn`` are families: the latter takes
    three rational eigenvalues, either as ``params`` or inline as
    ``"sol_mn(1,2,-3)"``.
    """
    m = _SOLMN_RE.match(name)
    if m:
        params = tuple(Fraction(x.strip()) for x in m.group(1).split(","))
        name = "sol_mn"
    if name == "sol_mn":
        if len(params) != 3:
            raise ValueError("sol_mn needs three eigenvalue parameters")
        g = sol_mn(*params)
        return CatalogEntry(g.name, g, (), "implementer-sourced",
                            "R^3 extended by a diagonal derivation with distinct eigenvalues",
                            tuple(Fraction(p) for p in params))
    m = _ABELIAN_RE.match(name)
    if m and name != "abelian4":
        n = int(m.group(1))
        pairs = ()
        if n >= 4 and n % 2 == 0:
            half = n // 2
            w1 = _a(n, 1, 2)
            w2 = ExteriorForm(n, 2, {(2 * i - 1, 2 * i): 1 for i in range(2, half + 1)})
            pairs = ((w1, w2),)
        return CatalogEntry(name, abelian(n), pairs, "standard", f"abelian R^{n}")
    entries = _entries()
    if name not in entries:
        raise KeyError(f"unknown catalog algebra {name!r}")
    return entries[name]
