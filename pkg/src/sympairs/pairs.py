"""Verification of symplectic, contact-symplectic and contact pairs.

Everything is checked on invariant forms over a Lie algebra, so constant
rank and constant class come for free; what remains is finite exact linear
algebra.  Every axiom is evaluated even after an earlier one fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exterior import ExteriorForm, Subspace, kernel, power, rank_two_form, restrict, wedge
from .lie import LieAlgebra, ce_d


@dataclass
class PairReport:
    kind: str
    dim: int
    axioms: dict[str, bool] = field(default_factory=dict)
    data: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return bool(self.axioms) and all(self.axioms.values())

    def __bool__(self):
        return self.verdict

    def check(self, name: str, ok: bool, why: str = "") -> bool:
        self.axioms[name] = bool(ok)
        if not ok and why:
            self.notes.append(f"{name}: {why}")
        return bool(ok)

    def failed(self) -> list[str]:
        return [k for k, v in self.axioms.items() if not v]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "dim": self.dim,
            "verdict": "pass" if self.verdict else "fail",
            "axioms": dict(self.axioms),
            "data": dict(self.data),
            "explanation": list(self.notes),
        }


@dataclass(frozen=True)
class FormClass:
    """Class 2k+1 data of a 1-form: ``a ^ (da)^k != 0`` and ``(da)^(k+1) = 0``.

    ``valid`` is False when the largest non-vanishing power of da kills
    ``a`` as well, i.e. the class is even and no such k exists.
    """

    k: int
    valid: bool

    @property
    def odd_class(self) -> int:
        return 2 * self.k + 1


def _check_dim(g: LieAlgebra, *forms: ExteriorForm):
    for f in forms:
        if f.dim != g.dim:
            raise ValueError(f"form in dimension {f.dim} on a {g.dim}-dimensional algebra")


def _check_degree(form: ExteriorForm, degree: int, label: str):
    if form.degree != degree:
        raise ValueError(f"{label} must have degree {degree}, got {form.degree}")


def form_class(g: LieAlgebra, alpha: ExteriorForm) -> FormClass:
    _check_degree(alpha, 1, "alpha")
    _check_dim(g, alpha)
    if alpha.is_zero():
        raise ValueError("the class of the zero 1-form is undefined")
    da = ce_d(g, alpha)
    r = 0
    while 2 * (r + 1) <= g.dim and not power(da, r + 1).is_zero():
        r += 1
    return FormClass(r, not wedge(alpha, power(da, r)).is_zero())


def top_form(g: LieAlgebra, alpha: ExteriorForm, k: int) -> ExteriorForm:
    """``a ^ (da)^k``, the form whose kernel is the class-(2k+1) foliation."""
    return wedge(alpha, power(ce_d(g, alpha), k))


def _nondegenerate_on(omega: ExteriorForm, S: Subspace) -> bool:
    if S.dim == 0 or S.dim % 2:
        return False
    return rank_two_form(restrict(omega, S)) == S.dim


def _contact_on(g: LieAlgebra, alpha: ExteriorForm, k: int, S: Subspace) -> bool:
    """``a|_S`` is a contact form on the (2k+1)-dimensional S.

    The restriction of ``a ^ (da)^k`` is the contact volume of ``a|_S``
    because S is a subalgebra (kernel of a closed form) and restriction
    commutes with d there.
    """
    if S.dim != 2 * k + 1:
        return False
    return not restrict(top_form(g, alpha, k), S).is_zero()


def check_symplectic_pair(g: LieAlgebra, w1: ExteriorForm, w2: ExteriorForm) -> PairReport:
    _check_degree(w1, 2, "w1")
    _check_degree(w2, 2, "w2")
    _check_dim(g, w1, w2)
    n = g.dim
    rep = PairReport("symplectic", n)
    d1, d2 = ce_d(g, w1), ce_d(g, w2)
    rep.check("w1_closed", d1.is_zero(), f"d w1 = {d1}")
    rep.check("w2_closed", d2.is_zero(), f"d w2 = {d2}")
    rep.check("w1_nontrivial", not w1.is_zero(), "w1 is the zero form")
    rep.check("w2_nontrivial", not w2.is_zero(), "w2 is the zero form")
    r1, r2 = rank_two_form(w1), rank_two_form(w2)
    rep.data.update(rank1=r1, rank2=r2)
    rep.check("ranks_complementary", r1 > 0 and r2 > 0 and r1 + r2 == n, f"ranks {r1} + {r2} != {n}")
    k1, k2 = kernel(w1), kernel(w2)
    rep.data.update(kernel1_dim=k1.dim, kernel2_dim=k2.dim)
    rep.check("kernels_complementary", k1.is_complement(k2), "kernel(w1) + kernel(w2) is not a direct sum decomposition")
    rep.check("w1_symplectic_on_kernel_w2", _nondegenerate_on(w1, k2), "w1 degenerates on the leaves of kernel(w2)")
    rep.check("w2_symplectic_on_kernel_w1", _nondegenerate_on(w2, k1), "w2 degenerates on the leaves of kernel(w1)")
    rep.notes.append("kernel distributions are integrable since both forms are closed")
    return rep


def check_contact_symplectic_pair(g: LieAlgebra, alpha: ExteriorForm, beta: ExteriorForm) -> PairReport:
    _check_degree(alpha, 1, "alpha")
    _check_degree(beta, 2, "beta")
    _check_dim(g, alpha, beta)
    n = g.dim
    rep = PairReport("contact-symplectic", n)
    db = ce_d(g, beta)
    rep.check("beta_closed", db.is_zero(), f"d beta = {db}")
    rep.check("beta_nontrivial", not beta.is_zero(), "beta is the zero form")
    if alpha.is_zero():
        rep.check("alpha_class", False, "alpha is the zero form")
        for name in ("dimension", "kernels_complementary", "alpha_contact_on_kernel_beta", "beta_symplectic_on_kernel_alpha"):
            rep.check(name, False)
        return rep
    cls = form_class(g, alpha)
    k = cls.k
    rep.check("alpha_class", cls.valid, "alpha has even class")
    l2 = rank_two_form(beta)
    rep.data.update(k=k, l=l2 // 2, rank_beta=l2)
    rep.check("dimension", n == 2 * k + l2 + 1, f"n = {n} but 2k+2l+1 = {2 * k + l2 + 1}")
    ka = kernel(top_form(g, alpha, k)) if cls.valid else Subspace(n)
    kb = kernel(beta)
    rep.data.update(kernel_alpha_dim=ka.dim, kernel_beta_dim=kb.dim)
    rep.check("kernels_complementary", cls.valid and ka.is_complement(kb), "kernel foliations are not complementary")
    rep.check("alpha_contact_on_kernel_beta", cls.valid and _contact_on(g, alpha, k, kb),
              "alpha is not contact on the leaves of kernel(beta)")
    rep.check("beta_symplectic_on_kernel_alpha", cls.valid and l2 > 0 and _nondegenerate_on(beta, ka),
              "beta degenerates on the leaves of kernel(alpha ^ (d alpha)^k)")
    return rep


def check_contact_pair(g: LieAlgebra, alpha: ExteriorForm, gamma: ExteriorForm) -> PairReport:
    _check_degree(alpha, 1, "alpha")
    _check_degree(gamma, 1, "gamma")
    _check_dim(g, alpha, gamma)
    n = g.dim
    rep = PairReport("contact", n)
    if alpha.is_zero() or gamma.is_zero():
        rep.check("alpha_class", not alpha.is_zero(), "alpha is the zero form")
        rep.check("gamma_class", not gamma.is_zero(), "gamma is the zero form")
        for name in ("dimension", "kernels_complementary", "alpha_contact_on_kernel_gamma", "gamma_contact_on_kernel_alpha"):
            rep.check(name, False)
        return rep
    ca, cg = form_class(g, alpha), form_class(g, gamma)
    k, l = ca.k, cg.k
    rep.data.update(k=k, l=l)
    rep.check("alpha_class", ca.valid, "alpha has even class")
    rep.check("gamma_class", cg.valid, "gamma has even class")
    rep.check("dimension", n == 2 * k + 2 * l + 2, f"n = {n} but 2k+2l+2 = {2 * k + 2 * l + 2}")
    ok = ca.valid and cg.valid
    ka = kernel(top_form(g, alpha, k)) if ok else Subspace(n)
    kg = kernel(top_form(g, gamma, l)) if ok else Subspace(n)
    rep.data.update(kernel_alpha_dim=ka.dim, kernel_gamma_dim=kg.dim)
    rep.check("kernels_complementary", ok and ka.is_complement(kg), "kernel foliations are not complementary")
    rep.check("alpha_contact_on_kernel_gamma", ok and _contact_on(g, alpha, k, kg),
              "alpha is not contact on the leaves of kernel(gamma ^ (d gamma)^l)")
    rep.check("gamma_contact_on_kernel_alpha", ok and _contact_on(g, gamma, l, ka),
              "gamma is not contact on the leaves of kernel(alpha ^ (d alpha)^k)")
    return rep


def pair_to_pm(w1: ExteriorForm, w2: ExteriorForm) -> tuple[ExteriorForm, ExteriorForm]:
    return w1 + w2, w1 - w2


def pm_to_pair(wp: ExteriorForm, wm: ExteriorForm) -> tuple[ExteriorForm, ExteriorForm]:
    half = Fraction(1, 2)
    return (wp + wm) * half, (wp - wm) * half


def couple_type(wp: ExteriorForm, wm: ExteriorForm, g: LieAlgebra | None = None) -> str:
    """Classify two 2-forms on a 4-space.

    Returns ``"symplectic-pair"`` when ``wp^wm = 0`` and ``wp^2 = -wm^2``,
    ``"conformal-couple"`` when ``wp^wm = 0`` and ``wp^2 = wm^2``,
    ``"neither"`` otherwise, and ``"degenerate"`` if either form fails to be
    symplectic (closedness is only checked when an algebra is given).
    """
    if wp.dim != 4 or wm.dim != 4 or wp.degree != 2 or wm.degree != 2:
        raise ValueError("couple_type works with 2-forms in dimension 4")
    if rank_two_form(wp) != 4 or rank_two_form(wm) != 4:
        return "degenerate"
    if g is not None and (not ce_d(g, wp).is_zero() or not ce_d(g, wm).is_zero()):
        return "degenerate"
    if not wedge(wp, wm).is_zero():
        return "neither"
    sp, sm = wedge(wp, wp), wedge(wm, wm)
    if sp == -sm:
        return "symplectic-pair"
    if sp == sm:
        return "conformal-couple"
    return "neither"
