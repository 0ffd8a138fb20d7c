"""End-to-end re-run of every worked example, decision and table row."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .boothbywang import bw_contact_pair_from_cs, bw_contact_symplectic, torus_extension
from .catalog import SOL_MN_SAMPLES, catalog_get
from .coordforms import check_coordinate_pair, nil3_infranil_pair, sol3_pair
from .exterior import ExteriorForm
from .fourman import classify_t2_bundle, table_instances
from .lie import ce_d, cohomology_dims
from .pairs import check_symplectic_pair
from .search import construct_pair_witness, has_invariant_symplectic, has_invariant_symplectic_pair


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _run(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    try:
        ok, detail = fn()
    except Exception as exc:  # a broken catalog entry must show up as a failed check
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    return Check(name, bool(ok), detail)


PAIR_EXAMPLES = (
    ("sol3xR pair", "sol3xR"),
    ("nil4 pair", "nil4"),
    ("nil3xR pair", "nil3xR"),
    ("product pair on abelian4", "abelian4"),
)

STRUCTURE_EQUATIONS = {
    # name -> {k: (i, j, coefficient)} for d a_k = c a_i ^ a_j, all others closed
    "sol3xR": {1: (1, 4, 1), 2: None, 3: (4, 3, 1), 4: None},
    "nil4": {1: None, 2: (1, 4, 1), 3: (2, 4, 1), 4: None},
    "nil3xR": {1: None, 2: None, 3: (1, 2, 1), 4: None},
}

NONEXISTENCE = ("sl2xR", "sol4_0", "sol4_1")
BETTI_ROWS = (("abelian4", 4), ("nil3xR", 3), ("nil4", 2), ("sol3xR", 2))


def reproduce_paper(lookup: Callable = catalog_get) -> list[Check]:
    checks: list[Check] = []

    for name, eqs in STRUCTURE_EQUATIONS.items():
        def structure(name=name, eqs=eqs):
            g = lookup(name).algebra
            for k, rhs in eqs.items():
                want = ExteriorForm(4, 2) if rhs is None else ExteriorForm.basis(4, rhs[0], rhs[1], coeff=rhs[2])
                if ce_d(g, ExteriorForm.basis(4, k)) != want:
                    return False, f"d a{k} = {ce_d(g, ExteriorForm.basis(4, k))}, expected {want}"
            return True, "structure equations reproduced"
        checks.append(_run(f"structure equations {name}", structure))

    for label, name in PAIR_EXAMPLES:
        def pair(name=name):
            e = lookup(name)
            rep = check_symplectic_pair(e.algebra, *e.pairs[0])
            return rep.verdict, ",".join(rep.failed()) or "all axioms pass"
        checks.append(_run(label, pair))

    for name in NONEXISTENCE:
        def nonexist(name=name):
            g = lookup(name).algebra
            w = construct_pair_witness(g)
            ok = not has_invariant_symplectic(g) and not has_invariant_symplectic_pair(g) and w.gram.is_zero
            return ok, f"signature {w.signature.as_tuple()}"
        checks.append(_run(f"no invariant symplectic form on {name}", nonexist))
    for params in SOL_MN_SAMPLES:
        def nonexist_mn(params=params):
            g = lookup("sol_mn", *params).algebra
            return not has_invariant_symplectic(g) and not has_invariant_symplectic_pair(g), g.name
        checks.append(_run(f"no invariant symplectic form on sol_mn{tuple(str(p) for p in params)}", nonexist_mn))

    for label, name in PAIR_EXAMPLES:
        def exists(name=name):
            g = lookup(name).algebra
            w = construct_pair_witness(g)
            return has_invariant_symplectic(g) and has_invariant_symplectic_pair(g) and w.found, \
                f"signature {w.signature.as_tuple()}"
        checks.append(_run(f"pair decision and witness on {name}", exists))

    for label, name in PAIR_EXAMPLES:
        def bw(name=name):
            e = lookup(name)
            g, (w1, w2) = e.algebra, e.pairs[0]
            first = bw_contact_symplectic(g, w1, w2)
            second = bw_contact_pair_from_cs(first.algebra, *first.forms)
            torus = torus_extension(g, w1, w2)
            ok = (first.report.verdict and second.report.verdict and torus.report.verdict
                  and torus.algebra == second.algebra and torus.forms == second.forms)
            return ok, f"dims {first.algebra.dim}, {second.algebra.dim}"
        checks.append(_run(f"Boothby-Wang theorems and corollary on {name}", bw))

    for label, forms in (("coordinate pair dy^dt, dx^dz - x dx^dy", nil3_infranil_pair),
                         ("coordinate pair dx^dy, dz^dt", sol3_pair)):
        def coords(forms=forms):
            r = check_coordinate_pair(*forms())
            ok = (all(r["closed"]) and all(r["square_zero"]) and r["volume_multiple"] in ("1", "-1")
                  and r["ranks"] == [[2], [2]] and r["samples"] == 625 and r["pointwise_pair"])
            return ok, f"product = {r['volume_multiple']} vol"
        checks.append(_run(label, coords))

    for b, row, b1, geom in table_instances():
        def table(b=b, row=row, b1=b1, geom=geom):
            got = classify_t2_bundle(b)
            return (got["row"], got["b1"], got["geometry"]) == (row, b1, geom), f"row {got['row']}"
        checks.append(_run(f"table row ({row}) C={b.C} D={b.D} e={b.euler}", table))

    for name, b1 in BETTI_ROWS:
        def betti(name=name, b1=b1):
            got = cohomology_dims(lookup(name).algebra)[1]
            return got == b1, f"b1 = {got}"
        checks.append(_run(f"b1 of {name}", betti))

    return checks
