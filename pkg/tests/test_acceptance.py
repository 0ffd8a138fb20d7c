"""Acceptance criteria 1-8, each printed as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are also printed
without ``-s``, bypassing capture).
"""

import time
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import Phase, given, seed, settings, strategies as st

from sympairs.boothbywang import bw_contact_pair_from_cs, bw_contact_symplectic, extension_is_jacobi, torus_extension
from sympairs.catalog import SOL_MN_SAMPLES, catalog_get
from sympairs.coordforms import check_coordinate_pair, nil3_infranil_pair, sol3_pair
from sympairs.exterior import ExteriorForm, basis_tuples, wedge
from sympairs.fourman import CASE_C, classify_t2_bundle, matching_rows, table_instances
from sympairs.lie import LieAlgebra, ce_d, closed_forms, cohomology_dims, is_closed, jacobi_check
from sympairs.pairs import check_symplectic_pair, couple_type, pair_to_pm
from sympairs.reproduce import reproduce_paper
from sympairs.search import (
    brute_force_oracle,
    congruent,
    construct_pair_witness,
    has_invariant_symplectic,
    has_invariant_symplectic_pair,
    signature,
)

from randalg import algebras4, forms, small, wide_algebras4
from test_fourman import all_bundles

a = lambda *idx: ExteriorForm.basis(4, *idx)


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail
    return emit


def timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


# -- 1 ------------------------------------------------------------------------

PAIR_CASES = [
    ("sol3xR", a(1, 3), a(2, 4)),
    ("nil4", a(1, 2), a(3, 4)),
    ("nil3xR", a(1, 3), a(2, 4)),
    ("abelian4", a(1, 2), a(3, 4)),
]


def test_criterion_1_pair_examples(report):
    rows = []
    for name, w1, w2 in PAIR_CASES:
        g = catalog_get(name).algebra
        rep, dt = timed(check_symplectic_pair, g, w1, w2)
        rows.append((name, rep.verdict, dt))
    ok = all(v and dt < 0.1 for _, v, dt in rows)
    report(1, ok, "; ".join(f"{n} {'pass' if v else 'FAIL'} {dt * 1000:.1f} ms" for n, v, dt in rows))


# -- 2 ------------------------------------------------------------------------


def test_criterion_2_nonexistence(report):
    cases = [(n, ()) for n in ("sl2xR", "sol4_0", "sol4_1")] + [("sol_mn", p) for p in SOL_MN_SAMPLES]
    assert len(SOL_MN_SAMPLES) >= 5
    bad = []
    slowest = 0.0
    for name, params in cases:
        g = catalog_get(name, *params).algebra
        t = time.perf_counter()
        sym = has_invariant_symplectic(g)
        cert = construct_pair_witness(g).certificate
        dt = time.perf_counter() - t
        slowest = max(slowest, dt)
        if sym or cert is None or not cert.is_zero or dt >= 0.1:
            bad.append(g.name)
    report(2, not bad, f"{len(cases)} algebras without invariant symplectic form, zero Gram certificates, "
                       f"slowest {slowest * 1000:.1f} ms" + (f"; failing {bad}" if bad else ""))


# -- 3 ------------------------------------------------------------------------


def test_criterion_3_boothby_wang(report):
    t = time.perf_counter()
    results = []
    for name, w1, w2 in PAIR_CASES:
        g = catalog_get(name).algebra
        first = bw_contact_symplectic(g, w1, w2)
        second = bw_contact_pair_from_cs(first.algebra, *first.forms)
        torus = torus_extension(g, w1, w2)
        results.append(first.algebra.dim == 5 and first.report.verdict
                       and second.algebra.dim == 6 and second.report.verdict
                       and torus.report.verdict and torus.algebra == second.algebra
                       and torus.forms == second.forms)
    dt = time.perf_counter() - t
    report(3, all(results) and dt < 0.5,
           f"{sum(results)}/{len(results)} pairs give contact-symplectic (dim 5), contact (dim 6) "
           f"and matching torus extensions in {dt * 1000:.0f} ms")


# -- 4 ------------------------------------------------------------------------


def test_criterion_4_coordinate_pairs(report):
    details, ok = [], True
    for label, pair in (("dy^dt, dx^dz - x dx^dy", nil3_infranil_pair), ("dx^dy, dz^dt", sol3_pair)):
        r = check_coordinate_pair(*pair())
        good = (r["closed"] == [True, True] and r["square_zero"] == [True, True]
                and r["volume_multiple"] in ("1", "-1") and r["samples"] == 625
                and r["ranks"] == [[2], [2]] and r["pointwise_pair"])
        ok &= good
        details.append(f"({label}) product {r['volume_multiple']} vol, rank 2 at {r['samples']} points")
    report(4, ok, "; ".join(details))


# -- 5 ------------------------------------------------------------------------


def test_criterion_5_table(report):
    t = time.perf_counter()
    inst = table_instances()
    hits = [(classify_t2_bundle(b)["row"], classify_t2_bundle(b)["b1"], classify_t2_bundle(b)["geometry"])
            == (row, b1, geom) for b, row, b1, geom in inst]
    rows_seen = {row for _, row, _, _ in inst}
    c_count = sum(1 for _, row, _, _ in inst if row == "c")
    n = overlaps = 0
    for b in all_bundles(3):
        n += 1
        overlaps += len(matching_rows(b)) > 1
    dt = time.perf_counter() - t
    ok = all(hits) and rows_seen == set("abcdefgh") and c_count == len(CASE_C) == 7 and overlaps == 0 and dt < 5
    report(5, ok, f"{sum(hits)}/{len(hits)} printed instances (rows a-h, 7 in case c); "
                  f"{overlaps} overlaps among {n} enumerated bundles; {dt:.2f} s")


# -- 6 ------------------------------------------------------------------------


def test_criterion_6_betti(report):
    got = [cohomology_dims(catalog_get(n).algebra)[1] for n in ("abelian4", "nil3xR", "nil4", "sol3xR")]
    first = {}
    for b, row, _, _ in table_instances():
        first.setdefault(row, classify_t2_bundle(b)["b1"])
    table = [first[r] for r in "abdg"]
    report(6, got == table == [4, 3, 2, 2],
           f"b1 = {got} for abelian4, nil3xR, nil4, sol3xR; table rows (a), (b), (d), (g) give {table}")


# -- 7 ------------------------------------------------------------------------

CASES = 200
PROPERTY = settings(max_examples=CASES, deadline=None, database=None, phases=[Phase.generate])

one_forms = st.lists(small, min_size=4, max_size=4).map(
    lambda cs: ExteriorForm(4, 1, [((i + 1,), c) for i, c in enumerate(cs)]))
two_forms = forms(4, 2)
decomposable = st.builds(wedge, one_forms, one_forms)


@st.composite
def symmetric(draw):
    n = draw(st.integers(1, 5))
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = Fraction(draw(st.integers(-3, 3)))
    return m


CATALOG4 = [catalog_get(n).algebra for n in ("abelian4", "nil3xR", "nil4", "sol3xR", "sl2xR", "sol4_0", "sol4_1")]
CATALOG4 += [catalog_get("sol_mn", *p).algebra for p in SOL_MN_SAMPLES]


def _suites():
    counts = {}

    def bump(key):
        counts[key] = counts.get(key, 0) + 1

    @seed(1)
    @PROPERTY
    @given(algebras4, forms(4, 1), forms(4, 2))
    def d_squared(g, x, w):
        bump("d^2 = 0")
        assert ce_d(g, ce_d(g, x)).is_zero() and ce_d(g, ce_d(g, w)).is_zero()

    @seed(2)
    @PROPERTY
    @given(algebras4, forms(4, 2), st.data())
    def extension_jacobi(g, omega, data):
        bump("Jacobi <=> closed cocycle")
        assert extension_is_jacobi(g, omega) == is_closed(g, omega)
        Z = closed_forms(g, 2)
        cs = data.draw(st.lists(small, min_size=len(Z), max_size=len(Z)))
        closed = sum((z * c for z, c in zip(Z, cs)), ExteriorForm(4, 2))
        assert extension_is_jacobi(g, closed)

    @seed(3)
    @PROPERTY
    @given(symmetric(), st.integers(0, 10**6))
    def sylvester(G, s):
        bump("Sylvester invariance")
        assert signature(G) == signature(congruent(G, s))

    @seed(4)
    @PROPERTY
    @given(st.one_of(st.sampled_from(CATALOG4), algebras4))
    def oracle(g):
        bump("oracle agreement")
        assert brute_force_oracle(g) == has_invariant_symplectic_pair(g)

    @seed(5)
    @PROPERTY
    @given(wide_algebras4)
    def witness(g):
        bump("witness soundness")
        w = construct_pair_witness(g)
        assert w.found == has_invariant_symplectic_pair(g)
        if w.found:
            assert check_symplectic_pair(g, *w.forms).verdict

    flat = LieAlgebra(4)

    @seed(6)
    @PROPERTY
    @given(st.one_of(decomposable, two_forms), st.one_of(decomposable, two_forms))
    def plus_minus(w1, w2):
        bump("pair <=> omega+-")
        pair = check_symplectic_pair(flat, w1, w2).verdict
        assert pair == (couple_type(*pair_to_pm(w1, w2)) == "symplectic-pair")

    for suite in (d_squared, extension_jacobi, sylvester, oracle, witness, plus_minus):
        suite()
    return counts


def test_criterion_7_property_suites(report):
    t = time.perf_counter()
    counts = _suites()
    dt = time.perf_counter() - t
    ok = len(counts) == 6 and all(c >= CASES for c in counts.values()) and dt < 60
    report(7, ok, ", ".join(f"{k} x{c}" for k, c in counts.items()) + f"; {dt:.1f} s total")


# -- 8 ------------------------------------------------------------------------


def single_flips(g: LieAlgebra):
    for (i, j), row in g.brackets.items():
        for k in row:
            br = {key: dict(v) for key, v in g.brackets.items()}
            br[(i, j)][k] = -br[(i, j)][k]
            yield (i, j, k), LieAlgebra(g.dim, br, name=g.name, check=False)


def detectors(name: str, mutant: LieAlgebra, base: dict) -> list[str]:
    found = []
    if not jacobi_check(mutant):
        found.append("jacobi")
    n = mutant.dim
    if any(not ce_d(mutant, ce_d(mutant, ExteriorForm.basis(n, *t))).is_zero()
           for p in range(n - 1) for t in basis_tuples(n, p)):
        found.append("d^2")

    def lookup(nm, *params):
        e = catalog_get(nm, *params)
        return replace(e, algebra=mutant) if nm == name else e

    flipped = [c.name for c in reproduce_paper(lookup) if base[c.name] and not c.ok]
    found += [f"verdict:{c}" for c in flipped]
    return found


def test_criterion_8_mutation(report):
    lines, missed = [], []
    base = {c.name: c.ok for c in reproduce_paper()}
    for name in ("sol3xR", "nil4"):
        for where, mutant in single_flips(catalog_get(name).algebra):
            hit = detectors(name, mutant, base)
            if not hit:
                missed.append((name, where))
            lines.append(f"{name} c{where}: {hit[0] if hit else 'UNDETECTED'}"
                         + (f" (+{len(hit) - 1})" if len(hit) > 1 else ""))
    report(8, not missed and len(lines) >= 4, "; ".join(lines))
