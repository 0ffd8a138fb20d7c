"""Existence of invariant symplectic forms and symplectic pairs in dimension 4.

On a 4-dimensional Lie algebra the wedge pairing ``(z, w) -> z ^ w / vol``
is a symmetric bilinear form on the closed 2-forms Z^2.  A closed w with
``w ^ w != 0`` exists iff the pairing is non-zero.  A non-zero closed 2-form
in dimension 4 with ``w ^ w = 0`` is decomposable, so a symplectic pair is
exactly two null vectors with non-zero product, which exist iff the pairing
is indefinite.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .exterior import ExteriorForm, wedge
from .lie import LieAlgebra, closed_forms
from .pairs import check_symplectic_pair
from .scalar import Scalar, rational_sqrt, simplify, sign


@dataclass(frozen=True)
class WedgeGram:
    basis: tuple
    matrix: tuple
    volume: ExteriorForm

    @property
    def is_zero(self) -> bool:
        return linalg.is_zero_matrix(self.matrix)

    def to_json(self) -> dict:
        from .io import form_to_json, scalar_to_json

        return {
            "basis": [form_to_json(b) for b in self.basis],
            "matrix": [[scalar_to_json(x) for x in row] for row in self.matrix],
            "volume": form_to_json(self.volume),
        }


@dataclass(frozen=True)
class SignatureResult:
    positive: int
    negative: int
    zero: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)

    @property
    def indefinite(self) -> bool:
        return self.positive >= 1 and self.negative >= 1


def wedge_pairing(a: ExteriorForm, b: ExteriorForm, volume: ExteriorForm):
    top = wedge(a, b)
    (idx,) = volume.terms.keys()
    return simplify(top.terms.get(idx, Fraction(0)) / volume.terms[idx])


def wedge_gram(g: LieAlgebra, volume: ExteriorForm | None = None) -> WedgeGram:
    if g.dim != 4:
        raise ValueError(f"wedge_gram needs a 4-dimensional algebra, got {g.dim}")
    vol = volume if volume is not None else ExteriorForm.volume(4)
    if vol.degree != 4 or vol.is_zero():
        raise ValueError("volume must be a non-zero 4-form")
    Z = closed_forms(g, 2)
    G = tuple(tuple(wedge_pairing(a, b, vol) for b in Z) for a in Z)
    return WedgeGram(tuple(Z), G, vol)


def diagonalize(G):
    """Symmetric Gaussian elimination: returns ``(diag, P)`` with P G P^T diagonal.

    Rows of P are the new basis vectors, expressed in the old basis.
    """
    n = len(G)
    A = [[simplify(x) for x in row] for row in G]
    for i in range(n):
        for j in range(n):
            if A[i][j] != A[j][i]:
                raise ValueError("matrix is not symmetric")
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def add_row_col(dst, src, f):
        # basis change b_dst += f * b_src, applied as a congruence
        A[dst] = [simplify(x + f * y) for x, y in zip(A[dst], A[src])]
        for r in range(n):
            A[r][dst] = simplify(A[r][dst] + f * A[r][src])
        P[dst] = [simplify(x + f * y) for x, y in zip(P[dst], P[src])]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        for r in range(n):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        P[i], P[j] = P[j], P[i]

    for k in range(n):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][i] != 0), None)
            if p is not None:
                swap(k, p)
            else:
                q = next((i for i in range(k + 1, n) if A[k][i] != 0), None)
                if q is None:
                    continue
                # (b_k + b_q) has square 2 A[k][q] != 0
                add_row_col(k, q, Fraction(1))
        piv = A[k][k]
        for i in range(k + 1, n):
            if A[i][k] != 0:
                add_row_col(i, k, simplify(-A[i][k] / piv))
    diag = [A[i][i] for i in range(n)]
    assert all(A[i][j] == 0 for i in range(n) for j in range(n) if i != j)
    return diag, P


def signature(G) -> SignatureResult:
    diag, _ = diagonalize(G)
    signs = [sign(x) for x in diag]
    return SignatureResult(signs.count(1), signs.count(-1), signs.count(0))


def has_invariant_symplectic(g: LieAlgebra) -> bool:
    return not wedge_gram(g).is_zero


def has_invariant_symplectic_pair(g: LieAlgebra) -> bool:
    gram = wedge_gram(g)
    return signature(gram.matrix).indefinite


@dataclass
class PairWitness:
    forms: tuple | None
    signature: SignatureResult
    gram: WedgeGram
    field_d: int = 0

    @property
    def found(self) -> bool:
        return self.forms is not None

    @property
    def certificate(self) -> WedgeGram | None:
        return None if self.found else self.gram


def _combine(basis, coeffs) -> ExteriorForm:
    acc = ExteriorForm(4, 2)
    for b, c in zip(basis, coeffs):
        if c != 0:
            acc = acc + b * c
    return acc


def construct_pair_witness(g: LieAlgebra) -> PairWitness:
    """Two closed null 2-forms with non-zero product, or the Gram as certificate.

    With a diagonal basis vector u of square a > 0 and v of square b < 0,
    ``u +- t v`` with ``t^2 = -a/b`` are null and pair to 2a.  A rational t
    is preferred; otherwise t lives in Q(sqrt d).
    """
    gram = wedge_gram(g)
    sig = signature(gram.matrix)
    if not sig.indefinite:
        return PairWitness(None, sig, gram)
    diag, P = diagonalize(gram.matrix)
    pos = [i for i, x in enumerate(diag) if sign(x) > 0]
    neg = [i for i, x in enumerate(diag) if sign(x) < 0]
    best = None
    for i in pos:
        for j in neg:
            r, d = rational_sqrt(-diag[i] / diag[j])
            cand = (d != 1, d, i, j, r)
            if best is None or cand < best:
                best = cand
    _, d, i, j, r = best
    t = r if d == 1 else Scalar(0, r, d)
    u = _combine(gram.basis, P[i])
    v = _combine(gram.basis, P[j])
    w1, w2 = u + v * t, u - v * t
    rep = check_symplectic_pair(g, w1, w2)
    assert rep.verdict, f"witness failed: {rep.failed()}"
    assert wedge(w1, w1).is_zero() and wedge(w2, w2).is_zero()
    return PairWitness((w1, w2), sig, gram, 0 if d == 1 else d)


def brute_force_oracle(g: LieAlgebra, seed: int = 0, trials: int = 500) -> bool:
    """Random small rational combinations of closed 2-forms, checked directly.

    Only a ``True`` answer is meaningful.  The search never looks at the
    Gram matrix.
    """
    if g.dim != 4:
        raise ValueError("brute_force_oracle works in dimension 4")
    Z = closed_forms(g, 2)
    if not Z:
        return False
    rng = random.Random(seed)
    vecs = [_integral(z.to_vector()) for z in Z]
    # the 1/2 of the coefficient menu is folded in by doubling everything else
    choices = (0, 0, 0, 2, -2, 4, -4, 1)

    def sample():
        while True:
            coeffs = [rng.choice(choices) for _ in Z]
            if any(coeffs):
                return [sum(c * z[i] for c, z in zip(coeffs, vecs) if c) for i in range(6)]

    for _ in range(trials):
        v1, v2 = sample(), sample()
        # cheap filters first: both must square to zero and pair non-trivially
        if _pf(v1, v1) != 0 or _pf(v2, v2) != 0 or _pf(v1, v2) == 0:
            continue
        w1, w2 = ExteriorForm.from_vector(4, 2, v1), ExteriorForm.from_vector(4, 2, v2)
        assert wedge(w1, w1).is_zero() and not wedge(w1, w2).is_zero()
        if check_symplectic_pair(g, w1, w2):
            return True
    return False


def _integral(v: list) -> list:
    """Clear denominators of a rational vector (entries from Q(sqrt d) are left alone)."""
    if not all(isinstance(x, (int, Fraction)) for x in v):
        return v
    m = 1
    for x in v:
        m = m * Fraction(x).denominator // math.gcd(m, Fraction(x).denominator)
    return [int(x * m) for x in v]


def _pf(u: list, v: list):
    """Coefficient of a1^a2^a3^a4 in u ^ v, for 2-forms given in the basis 12,13,14,23,24,34."""
    return u[0] * v[5] + u[5] * v[0] - u[1] * v[4] - u[4] * v[1] + u[2] * v[3] + u[3] * v[2]


def congruent(G, seed: int):
    """A random congruence transform ``Q G Q^T`` with Q invertible over Q."""
    rng = random.Random(seed)
    n = len(G)
    while True:
        Q = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        if linalg.rank(Q) == n:
            break
    return linalg.matmul(linalg.matmul(Q, [list(r) for r in G]), linalg.transpose(Q))
