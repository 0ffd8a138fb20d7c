"""Differential forms with polynomial coefficients on a coordinate chart.

Coordinates are numbered 1..n; on R^4 they are read as (x, y, z, t).
Polynomials are sparse maps from exponent tuples to Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .exterior import ExteriorForm, perm_sign, rank_two_form


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, Fraction] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {nvars} variables")
            acc[exp] = acc.get(exp, Fraction(0)) + Fraction(c)
        self.nvars = nvars
        self.terms = {e: c for e, c in sorted(acc.items()) if c != 0}

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        return Poly(self.nvars, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = []
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out.append((tuple(a + b for a, b in zip(e1, e2)), c1 * c2))
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        acc = Poly.const(self.nvars, 1)
        for _ in range(k):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        return self == Poly.const(self.nvars, other)

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def diff(self, i: int) -> "Poly":
        out = []
        for e, c in self.terms.items():
            if e[i - 1]:
                ne = list(e)
                ne[i - 1] -= 1
                out.append((tuple(ne), c * e[i - 1]))
        return Poly(self.nvars, out)

    def __call__(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def compose(self, subs: Sequence["Poly"]) -> "Poly":
        """Substitute ``subs[i]`` for variable i+1."""
        if len(subs) != self.nvars:
            raise ValueError("need one substitution per variable")
        m = subs[0].nvars if subs else 0
        total = Poly(m)
        for e, c in self.terms.items():
            term = Poly.const(m, c)
            for s, k in zip(subs, e):
                if k:
                    term = term * s ** k
            total = total + term
        return total

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def format_poly(p: Poly, names: str = "xyzt") -> str:
    if not p.terms:
        return "0"
    syms = list(names) if p.nvars <= len(names) else [f"x{i}" for i in range(1, p.nvars + 1)]
    parts = []
    for e, c in p.terms.items():
        mono = "*".join(s if k == 1 else f"{s}^{k}" for s, k in zip(syms, e) if k)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


class PolyForm:
    """A p-form ``sum_I f_I dx_I`` on R^n with polynomial f_I."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, degree: int, terms: Mapping[tuple, Poly] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, Poly] = {}
        for idx, f in items:
            idx = tuple(int(i) for i in idx)
            if len(idx) != degree or any(i < 1 or i > dim for i in idx):
                raise ValueError(f"bad index tuple {idx} for a {degree}-form on R^{dim}")
            if not isinstance(f, Poly):
                f = Poly.const(dim, f)
            if f.nvars != dim:
                raise ValueError("coefficient polynomial has the wrong number of variables")
            sgn = perm_sign(idx)
            if sgn == 0:
                continue
            key = tuple(sorted(idx))
            acc[key] = acc.get(key, Poly(dim)) + (f if sgn > 0 else -f)
        self.dim = dim
        self.degree = degree
        self.terms = {k: v for k, v in sorted(acc.items()) if not v.is_zero()}

    @classmethod
    def basis(cls, dim: int, *idx: int, coeff=1) -> "PolyForm":
        return cls(dim, len(idx), {tuple(idx): coeff})

    @classmethod
    def volume(cls, dim: int) -> "PolyForm":
        return cls.basis(dim, *range(1, dim + 1))

    @classmethod
    def function(cls, f: Poly) -> "PolyForm":
        return cls(f.nvars, 0, {(): f})

    def __add__(self, other: "PolyForm"):
        if (other.dim, other.degree) != (self.dim, self.degree):
            raise ValueError("cannot add forms of different shape")
        return PolyForm(self.dim, self.degree, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return PolyForm(self.dim, self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, f):
        if isinstance(f, PolyForm):
            return NotImplemented
        return PolyForm(self.dim, self.degree, {k: v * f for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.dim, self.degree, self.terms) == (other.dim, other.degree, other.terms)

    def __hash__(self):
        return hash((self.dim, self.degree, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def at(self, point: Sequence) -> ExteriorForm:
        """Evaluate the coefficients at a point, giving a constant form."""
        if len(point) != self.dim:
            raise ValueError("point has the wrong number of coordinates")
        return ExteriorForm(self.dim, self.degree, {k: f(point) for k, f in self.terms.items()})

    def __repr__(self):
        return f"PolyForm({format_polyform(self)})"


def format_polyform(phi: PolyForm, names: str = "xyzt") -> str:
    if not phi.terms:
        return "0"
    syms = list(names) if phi.dim <= len(names) else [f"x{i}" for i in range(1, phi.dim + 1)]
    parts = []
    for idx, f in phi.terms.items():
        d = "^".join(f"d{syms[i - 1]}" for i in idx) or "1"
        parts.append(f"({format_poly(f, names)})*{d}")
    return " + ".join(parts)


def pd(phi: PolyForm) -> PolyForm:
    """Exterior derivative ``d(f dx_I) = sum_j df/dx_j dx_j ^ dx_I``."""
    out = []
    for idx, f in phi.terms.items():
        for j in range(1, phi.dim + 1):
            if j in idx:
                continue
            fj = f.diff(j)
            if not fj.is_zero():
                out.append(((j,) + idx, fj))
    return PolyForm(phi.dim, phi.degree + 1, out)


def pwedge(phi: PolyForm, psi: PolyForm) -> PolyForm:
    if phi.dim != psi.dim:
        raise ValueError("forms live on different charts")
    out = []
    for i, f in phi.terms.items():
        si = set(i)
        for j, g in psi.terms.items():
            if si.isdisjoint(j):
                out.append((i + j, f * g))
    return PolyForm(phi.dim, phi.degree + psi.degree, out)


class PolyMap:
    """Polynomial map R^m -> R^n given by one polynomial per target coordinate."""

    __slots__ = ("source_dim", "components")

    def __init__(self, components: Sequence[Poly]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a map needs at least one component")
        m = comps[0].nvars
        if any(c.nvars != m for c in comps):
            raise ValueError("components must share the source chart")
        self.source_dim = m
        self.components = comps

    @property
    def target_dim(self) -> int:
        return len(self.components)

    @classmethod
    def identity(cls, n: int) -> "PolyMap":
        return cls([Poly.var(n, i) for i in range(1, n + 1)])

    @classmethod
    def affine(cls, matrix: Sequence[Sequence], shift: Sequence) -> "PolyMap":
        """``x -> A x + b``."""
        n = len(matrix[0])
        comps = []
        for row, b in zip(matrix, shift):
            p = Poly.const(n, b)
            for j, a in enumerate(row):
                if a:
                    p = p + Poly.var(n, j + 1) * a
            comps.append(p)
        return cls(comps)

    def __call__(self, point):
        return [c(point) for c in self.components]

    def then(self, other: "PolyMap") -> "PolyMap":
        """``other o self``."""
        if other.source_dim != self.target_dim:
            raise ValueError("maps are not composable")
        return PolyMap([c.compose(self.components) for c in other.components])

    def __eq__(self, other):
        return isinstance(other, PolyMap) and self.components == other.components

    def __hash__(self):
        return hash(self.components)


def compose(f: PolyMap, g: PolyMap) -> PolyMap:
    """``f o g`` (apply g first)."""
    return g.then(f)


def pullback(f: PolyMap, phi: PolyForm) -> PolyForm:
    if f.target_dim != phi.dim:
        raise ValueError(f"map lands in R^{f.target_dim}, form lives on R^{phi.dim}")
    m = f.source_dim
    dfs = [pd(PolyForm.function(c)) for c in f.components]
    total = PolyForm(m, phi.degree)
    for idx, coeff in phi.terms.items():
        term = PolyForm.function(coeff.compose(f.components))
        for i in idx:
            term = pwedge(term, dfs[i - 1])
        total = total + term
    return total


def invariance_check(phi: PolyForm, gens: Sequence[PolyMap]) -> list[bool]:
    out = []
    for g in gens:
        if g.source_dim != g.target_dim or g.target_dim != phi.dim:
            raise ValueError("invariance needs self-maps of the chart")
        out.append((pullback(g, phi) - phi).is_zero())
    return out


def default_samples(n: int = 4) -> list[tuple]:
    vals = (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1))
    return list(product(vals, repeat=n))


def generic_rank(phi: PolyForm, samples: Sequence[Sequence] | None = None) -> dict:
    if phi.degree != 2:
        raise ValueError("generic_rank needs a 2-form")
    if samples is None:
        samples = default_samples(phi.dim)
    samples = list(samples)
    if not samples:
        raise ValueError("need at least one sample point")
    ranks = [rank_two_form(phi.at(p)) for p in samples]
    square_zero = pwedge(phi, phi).is_zero()
    # a constant non-zero coefficient certifies phi != 0 at every point
    const_certificate = next((idx for idx, f in phi.terms.items() if list(f.terms) == [(0,) * phi.dim]), None)
    return {
        "square_identically_zero": square_zero,
        "ranks": ranks,
        "min_rank": min(ranks),
        "max_rank": max(ranks),
        "nonvanishing_certificate": list(const_certificate) if const_certificate else None,
        "constant_rank_2_certified": square_zero and const_certificate is not None,
    }


def check_coordinate_pair(w1: PolyForm, w2: PolyForm, samples=None) -> dict:
    """Closedness, null squares, product a constant multiple of the volume, pointwise pair axioms."""
    from .lie import LieAlgebra
    from .pairs import check_symplectic_pair

    n = w1.dim
    prod = pwedge(w1, w2)
    vol = PolyForm.volume(n)
    ratio = None
    if set(prod.terms) == set(vol.terms):
        (idx,) = prod.terms
        c = prod.terms[idx]
        if list(c.terms) == [(0,) * n]:
            ratio = c.constant_term
    pts = default_samples(n) if samples is None else list(samples)
    flat = LieAlgebra(n, {})
    pointwise = [check_symplectic_pair(flat, w1.at(p), w2.at(p)).verdict for p in pts]
    r1, r2 = generic_rank(w1, pts), generic_rank(w2, pts)
    return {
        "closed": [pd(w1).is_zero(), pd(w2).is_zero()],
        "square_zero": [r1["square_identically_zero"], r2["square_identically_zero"]],
        "volume_multiple": None if ratio is None else str(ratio),
        "ranks": [sorted(set(r1["ranks"])), sorted(set(r2["ranks"]))],
        "samples": len(pts),
        "pointwise_pair": all(pointwise),
    }


# the two coordinate pairs on R^4 = (x, y, z, t)
def nil3_infranil_pair() -> tuple[PolyForm, PolyForm]:
    """``dy^dt`` and ``dx^dz - x dx^dy``."""
    x = Poly.var(4, 1)
    return PolyForm.basis(4, 2, 4), PolyForm.basis(4, 1, 3) - PolyForm.basis(4, 1, 2, coeff=x)


def sol3_pair() -> tuple[PolyForm, PolyForm]:
    """``dx^dy`` and ``dz^dt``."""
    return PolyForm.basis(4, 1, 2), PolyForm.basis(4, 3, 4)
