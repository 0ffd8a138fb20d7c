"""Alternating forms on a finite-dimensional coordinate space.

Index tuples are 1-based and strictly increasing, so ``(1, 3)`` is
``a1 ^ a3``.  Forms are immutable; equality is equality of the sparse
coefficient maps.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import linalg
from . import scalar as sc
from .scalar import simplify

MAX_DIM = 16


def perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (0 if it has repeats)."""
    s = list(seq)
    if len(set(s)) != len(s):
        return 0
    sgn = 1
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sgn = -sgn
    return sgn


class ExteriorForm:
    __slots__ = ("dim", "degree", "terms", "_hash")

    def __init__(self, dim: int, degree: int, terms: Mapping[tuple, object] | Iterable = ()):
        if not 0 <= dim <= MAX_DIM:
            raise ValueError(f"ambient dimension {dim} outside 0..{MAX_DIM}")
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, object] = {}
        for idx, c in items:
            idx = tuple(int(i) for i in idx)
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} does not have degree {degree}")
            if any(i < 1 or i > dim for i in idx):
                raise ValueError(f"index tuple {idx} outside 1..{dim}")
            sgn = perm_sign(idx)
            if sgn == 0:
                continue
            key = tuple(sorted(idx))
            acc[key] = acc.get(key, Fraction(0)) + sgn * simplify(c)
        self.dim = dim
        self.degree = degree
        self.terms = {k: simplify(v) for k, v in sorted(acc.items()) if v != 0}
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, dim: int, degree: int) -> "ExteriorForm":
        return cls(dim, degree)

    @classmethod
    def basis(cls, dim: int, *idx: int, coeff=1) -> "ExteriorForm":
        """``coeff * a_{i1} ^ ... ^ a_{ip}``; ``basis(4)`` is the constant 1."""
        return cls(dim, len(idx), {tuple(idx): coeff})

    @classmethod
    def volume(cls, dim: int) -> "ExteriorForm":
        return cls.basis(dim, *range(1, dim + 1))

    @classmethod
    def from_vector(cls, dim: int, degree: int, vec: Sequence) -> "ExteriorForm":
        """Inverse of :meth:`to_vector` (coordinates in lexicographic basis)."""
        return cls(dim, degree, zip(basis_tuples(dim, degree), vec))

    # -- vector-space structure ---------------------------------------------

    def _check(self, other: "ExteriorForm"):
        if not isinstance(other, ExteriorForm):
            raise TypeError("expected an ExteriorForm")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        self._check(other)
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        return ExteriorForm(self.dim, self.degree, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return ExteriorForm(self.dim, self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, ExteriorForm):
            return NotImplemented
        c = simplify(c)
        return ExteriorForm(self.dim, self.degree, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return (self.dim, self.degree, self.terms) == (other.dim, other.degree, other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.degree, tuple(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, *idx: int):
        key = tuple(idx)
        sgn = perm_sign(key)
        if sgn == 0:
            return Fraction(0)
        return sgn * self.terms.get(tuple(sorted(key)), Fraction(0))

    def to_vector(self) -> list:
        return [self.terms.get(t, Fraction(0)) for t in basis_tuples(self.dim, self.degree)]

    def embed(self, dim: int, index_map: Mapping[int, int] | None = None) -> "ExteriorForm":
        """Push the form into a bigger coordinate space (identity index map by default)."""
        if index_map is None:
            index_map = {i: i for i in range(1, self.dim + 1)}
        return ExteriorForm(dim, self.degree, [(tuple(index_map[i] for i in k), v) for k, v in self.terms.items()])

    def __repr__(self):
        return f"ExteriorForm({self.dim}, {self.degree}, {format_form(self)!r})"

    def __str__(self):
        return format_form(self)


def basis_tuples(dim: int, degree: int) -> list[tuple]:
    return list(combinations(range(1, dim + 1), degree))


def format_form(phi: ExteriorForm, symbol: str = "a") -> str:
    if not phi.terms:
        return "0"
    parts = []
    for idx, c in phi.terms.items():
        mono = "^".join(f"{symbol}{i}" for i in idx) or "1"
        if c == 1:
            parts.append(f"+{mono}")
        elif c == -1:
            parts.append(f"-{mono}")
        else:
            txt = sc.to_str(c)
            if isinstance(c, sc.Scalar) and c.a != 0:
                txt = f"({txt})"
            parts.append(("" if txt.startswith("-") else "+") + f"{txt}*{mono}")
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


def wedge(phi: ExteriorForm, psi: ExteriorForm) -> ExteriorForm:
    if phi.dim != psi.dim:
        raise ValueError(f"dimension mismatch: {phi.dim} vs {psi.dim}")
    deg = phi.degree + psi.degree
    if deg > phi.dim:
        return ExteriorForm(phi.dim, deg)
    out = []
    for i, a in phi.terms.items():
        si = set(i)
        for j, b in psi.terms.items():
            if si.isdisjoint(j):
                out.append((i + j, a * b))
    return ExteriorForm(phi.dim, deg, out)


def wedge_all(forms: Sequence[ExteriorForm], dim: int | None = None) -> ExteriorForm:
    if not forms:
        return ExteriorForm.basis(dim or 0)
    acc = forms[0]
    for f in forms[1:]:
        acc = wedge(acc, f)
    return acc


def power(phi: ExteriorForm, k: int) -> ExteriorForm:
    """k-fold wedge power; ``power(phi, 0)`` is the constant 1."""
    acc = ExteriorForm.basis(phi.dim)
    for _ in range(k):
        acc = wedge(acc, phi)
        if acc.is_zero():
            return ExteriorForm(phi.dim, k * phi.degree)
    return acc


def contract(v: Sequence, phi: ExteriorForm) -> ExteriorForm:
    """Interior product of the vector ``v`` (coordinates 1..n) into ``phi``."""
    if len(v) != phi.dim:
        raise ValueError(f"vector of length {len(v)} in dimension {phi.dim}")
    if phi.degree == 0:
        raise ValueError("cannot contract into a 0-form")
    out = []
    for idx, c in phi.terms.items():
        for pos, i in enumerate(idx):
            vi = v[i - 1]
            if vi != 0:
                out.append((idx[:pos] + idx[pos + 1:], (-1) ** pos * c * vi))
    return ExteriorForm(phi.dim, phi.degree - 1, out)


def evaluate(phi: ExteriorForm, *vectors: Sequence):
    """``phi(v1, ..., vp)``."""
    if len(vectors) != phi.degree:
        raise ValueError("number of vectors must equal the degree")
    acc = phi
    for v in vectors:
        acc = contract(v, acc)
    return acc.terms.get((), Fraction(0))


def skew_matrix(omega: ExteriorForm) -> list[list]:
    if omega.degree != 2:
        raise ValueError(f"expected a 2-form, got degree {omega.degree}")
    n = omega.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in omega.terms.items():
        m[i - 1][j - 1] = c
        m[j - 1][i - 1] = -c
    return m


def rank_two_form(omega: ExteriorForm) -> int:
    r = linalg.rank(skew_matrix(omega))
    # top power test: rank 2k iff omega^k != 0 and omega^(k+1) == 0
    assert not power(omega, r // 2).is_zero() and power(omega, r // 2 + 1).is_zero(), \
        "rank disagrees with wedge powers"
    return r


def is_nondegenerate(omega: ExteriorForm) -> bool:
    return omega.dim % 2 == 0 and rank_two_form(omega) == omega.dim


class Subspace:
    """A linear subspace of Q^n (or Q(sqrt d)^n), stored by its RREF basis."""

    __slots__ = ("dim_ambient", "basis")

    def __init__(self, dim_ambient: int, vectors: Iterable[Sequence] = ()):
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != dim_ambient:
                raise ValueError("vector length does not match the ambient dimension")
        red, _ = linalg.rref(vecs) if vecs else ([], [])
        self.dim_ambient = dim_ambient
        self.basis = tuple(tuple(r) for r in red)

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, unit_vectors(n))

    @classmethod
    def span_of(cls, n: int, *indices: int) -> "Subspace":
        return cls(n, [unit_vector(n, i) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim_ambient == other.dim_ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim_ambient, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.dim_ambient, list(self.basis) + list(other.basis))

    def contains(self, v: Sequence) -> bool:
        return linalg.rank(list(self.basis) + [list(v)]) == self.dim

    def is_complement(self, other: "Subspace") -> bool:
        """Direct-sum decomposition of the ambient space."""
        return self.dim + other.dim == self.dim_ambient and (self + other).dim == self.dim_ambient

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(sc.to_str(x) for x in r) + ")" for r in self.basis)
        return f"Subspace({self.dim_ambient}, [{rows}])"


def unit_vector(n: int, i: int) -> list:
    v = [Fraction(0)] * n
    v[i - 1] = Fraction(1)
    return v


def unit_vectors(n: int) -> list[list]:
    return [unit_vector(n, i) for i in range(1, n + 1)]


def kernel(phi: ExteriorForm) -> Subspace:
    """``{v : contract(v, phi) = 0}``."""
    n = phi.dim
    if phi.degree == 0:
        raise ValueError("kernel of a 0-form is undefined")
    # column i = contract(e_i, phi) in the (p-1)-form basis
    cols = [contract(e, phi).to_vector() for e in unit_vectors(n)]
    rows = linalg.transpose(cols) if cols and cols[0] else []
    if not rows:
        return Subspace.whole(n)
    return Subspace(n, linalg.nullspace(rows, n))


def restrict(phi: ExteriorForm, S: Subspace) -> ExteriorForm:
    """Pull ``phi`` back along the inclusion of S, in the stored basis of S."""
    if S.dim_ambient != phi.dim:
        raise ValueError("subspace lives in a different dimension")
    k = S.dim
    terms = {}
    for idx in basis_tuples(k, phi.degree):
        terms[idx] = evaluate(phi, *(S.basis[i - 1] for i in idx))
    return ExteriorForm(k, phi.degree, terms)
