"""Exact Gaussian elimination over Q and Q(sqrt(d)).

Matrices are lists of rows; entries are Fractions or Scalars.  Nothing here
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import simplify

ZERO = Fraction(0)


def rref(rows):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    m = [[simplify(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [simplify(x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [simplify(x - f * y) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None):
    """Basis of ``{v : A v = 0}``, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = simplify(-row[f])
        basis.append(v)
    return basis


def matmul(a, b):
    return [[simplify(sum((x * y for x, y in zip(row, col)), ZERO)) for col in zip(*b)] for row in a]


def transpose(a):
    return [list(c) for c in zip(*a)]


def is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)
