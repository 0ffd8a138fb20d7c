"""Leafwise Boothby-Wang construction as central extensions of Lie algebras.

Extending g by a closed 2-form w adds a central generator e0 (stored at
index ``dim g + 1``) with ``[x, y] = [x, y]_g - w(x, y) e0``.  Its dual
a0 is then a connection form with ``d a0 = w``.  Integrality of [w] is a
global condition on a quotient manifold and is carried as an unchecked
assumption only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exterior import ExteriorForm
from .lie import LieAlgebra, ce_d, jacobi_check
from .pairs import (
    PairReport,
    check_contact_pair,
    check_contact_symplectic_pair,
    check_symplectic_pair,
    form_class,
    rank_two_form,
)

INTEGRALITY_NOTE = "integrality of the cocycle class is assumed, not checked"


class InvalidPairError(ValueError):
    def __init__(self, message: str, report: PairReport | None = None):
        super().__init__(message)
        self.report = report


class NotClosedError(ValueError):
    def __init__(self, residual: ExteriorForm):
        super().__init__(f"cocycle is not closed: d w = {residual}")
        self.residual = residual


@dataclass(frozen=True)
class CentralExtension:
    base: LieAlgebra
    cocycle: ExteriorForm
    total: LieAlgebra
    fiber_index: int
    assumptions: tuple = field(default=(INTEGRALITY_NOTE,))

    @property
    def connection(self) -> ExteriorForm:
        return ExteriorForm.basis(self.total.dim, self.fiber_index)

    def lift(self, phi: ExteriorForm) -> ExteriorForm:
        """Pull a form on the base back to the total algebra."""
        return phi.embed(self.total.dim)


def extension_algebra(g: LieAlgebra, omega: ExteriorForm, name: str = "", check: bool = True) -> LieAlgebra:
    if omega.degree != 2 or omega.dim != g.dim:
        raise ValueError("the cocycle must be a 2-form on g")
    n = g.dim
    br = {k: dict(v) for k, v in g.brackets.items()}
    for (i, j), c in omega.terms.items():
        br.setdefault((i, j), {})[n + 1] = -c
    return LieAlgebra(n + 1, br, name=name or f"{g.name or 'g'}~", check=check)


def central_extension(g: LieAlgebra, omega: ExteriorForm, name: str = "") -> CentralExtension:
    res = ce_d(g, omega)
    if not res.is_zero():
        raise NotClosedError(res)
    total = extension_algebra(g, omega, name=name)
    ext = CentralExtension(g, omega, total, g.dim + 1)
    assert ce_d(total, ext.connection) == ext.lift(omega)
    return ext


@dataclass
class BWResult:
    extension: CentralExtension
    forms: tuple
    report: PairReport

    @property
    def algebra(self) -> LieAlgebra:
        return self.extension.total


def bw_contact_symplectic(g: LieAlgebra, w1: ExteriorForm, w2: ExteriorForm) -> BWResult:
    """Circle bundle with curvature w1; returns (alpha, beta = lifted w2)."""
    rep = check_symplectic_pair(g, w1, w2)
    if not rep:
        raise InvalidPairError(f"not a symplectic pair: {', '.join(rep.failed())}", rep)
    ext = central_extension(g, w1)
    alpha, beta = ext.connection, ext.lift(w2)
    out = check_contact_symplectic_pair(ext.total, alpha, beta)
    out.data["expected_k"] = rank_two_form(w1) // 2
    out.check("k_matches_rank_w1", out.data.get("k") == rank_two_form(w1) // 2)
    out.notes.append(INTEGRALITY_NOTE)
    return BWResult(ext, (alpha, beta), out)


def bw_contact_pair_from_cs(g: LieAlgebra, alpha: ExteriorForm, beta: ExteriorForm) -> BWResult:
    """Circle bundle with curvature beta; returns (alpha pulled back, gamma)."""
    rep = check_contact_symplectic_pair(g, alpha, beta)
    if not rep:
        raise InvalidPairError(f"not a contact-symplectic pair: {', '.join(rep.failed())}", rep)
    ext = central_extension(g, beta)
    a, gamma = ext.lift(alpha), ext.connection
    out = check_contact_pair(ext.total, a, gamma)
    out.notes.append(INTEGRALITY_NOTE)
    return BWResult(ext, (a, gamma), out)


@dataclass
class TorusResult:
    first: CentralExtension
    second: CentralExtension
    forms: tuple
    report: PairReport

    @property
    def algebra(self) -> LieAlgebra:
        return self.second.total


def torus_extension(g: LieAlgebra, w1: ExteriorForm, w2: ExteriorForm) -> TorusResult:
    """Fiber product of the circle bundles with curvatures w1 and w2."""
    rep = check_symplectic_pair(g, w1, w2)
    if not rep:
        raise InvalidPairError(f"not a symplectic pair: {', '.join(rep.failed())}", rep)
    first = central_extension(g, w1)
    second = central_extension(first.total, first.lift(w2))
    alpha = second.lift(first.connection)
    gamma = second.connection
    out = check_contact_pair(second.total, alpha, gamma)
    out.notes.append(INTEGRALITY_NOTE)
    return TorusResult(first, second, (alpha, gamma), out)


def extension_is_jacobi(g: LieAlgebra, omega: ExteriorForm) -> bool:
    return bool(jacobi_check(extension_algebra(g, omega, check=False)))


__all__ = [
    "CentralExtension",
    "BWResult",
    "TorusResult",
    "InvalidPairError",
    "NotClosedError",
    "central_extension",
    "extension_algebra",
    "extension_is_jacobi",
    "bw_contact_symplectic",
    "bw_contact_pair_from_cs",
    "torus_extension",
    "form_class",
]
