"""Exact scalars in Q or a real quadratic field Q(sqrt(d)).

Coefficients throughout the package are either :class:`fractions.Fraction`
or :class:`Scalar`.  A :class:`Scalar` whose irrational part vanishes is
collapsed back to a ``Fraction`` by :func:`simplify`, so purely rational
computations never pay for the extension.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Union

Number = Union[Fraction, "Scalar"]


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` square-free (n > 0)."""
    if n <= 0:
        raise ValueError("squarefree_decomposition needs a positive integer")
    s, d = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1
    return s, d * n


def rational_sqrt(q: Fraction) -> tuple[Fraction, int]:
    """Write ``sqrt(q)`` as ``r*sqrt(d)`` with r rational, d square-free.

    ``d == 1`` means q is a rational square.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError("square root of a negative rational")
    if q == 0:
        return Fraction(0), 1
    s, d = squarefree_decomposition(q.numerator * q.denominator)
    return Fraction(s, q.denominator), d


class Scalar:
    """``a + b*sqrt(d)`` with rational a, b and square-free d > 1."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a, b = Fraction(a), Fraction(b)
        d = int(d)
        if d < 0:
            raise ValueError("only real quadratic fields are supported")
        if b != 0 and d > 1:
            s, d = squarefree_decomposition(d)
            b *= s
        if d <= 1:
            # sqrt(0) = 0, sqrt(1) = 1
            a, b = a + b * d, Fraction(0)
        if b == 0:
            d = 0
        self.a, self.b, self.d = a, b, d

    # -- coercion helpers -------------------------------------------------

    @staticmethod
    def _parts(x) -> tuple[Fraction, Fraction, int]:
        if isinstance(x, Scalar):
            return x.a, x.b, x.d
        if isinstance(x, (Rational, int)):
            return Fraction(x), Fraction(0), 0
        raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")

    @staticmethod
    def _common(d1: int, b1: Fraction, d2: int, b2: Fraction) -> int:
        if b1 == 0:
            return d2
        if b2 == 0 or d1 == d2:
            return d1
        raise ValueError(f"mixed quadratic fields sqrt({d1}) and sqrt({d2})")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            a2, b2, d2 = self._parts(other)
        except TypeError:
            return NotImplemented
        d = self._common(self.d, self.b, d2, b2)
        return simplify(Scalar(self.a + a2, self.b + b2, d))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            a2, b2, d2 = self._parts(other)
        except TypeError:
            return NotImplemented
        d = self._common(self.d, self.b, d2, b2)
        return simplify(Scalar(self.a - a2, self.b - b2, d))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            a2, b2, d2 = self._parts(other)
        except TypeError:
            return NotImplemented
        d = self._common(self.d, self.b, d2, b2)
        a = self.a * a2 + self.b * b2 * d
        b = self.a * b2 + self.b * a2
        return simplify(Scalar(a, b, d))

    __rmul__ = __mul__

    def inverse(self):
        norm = self.a * self.a - self.d * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        return simplify(Scalar(self.a / norm, -self.b / norm, self.d))

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return self * other.inverse()
        try:
            a2, _, _ = self._parts(other)
        except TypeError:
            return NotImplemented
        if a2 == 0:
            raise ZeroDivisionError("division by zero")
        return simplify(Scalar(self.a / a2, self.b / a2, self.d))

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        try:
            a2, b2, d2 = self._parts(other)
        except TypeError:
            return NotImplemented
        if self.b == 0 and b2 == 0:
            return self.a == a2
        return self.a == a2 and self.b == b2 and self.d == d2

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        return sign(self)

    def __lt__(self, other):
        return sign(self - other) < 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        return f"Scalar({to_str(self)!r})"

    def __str__(self):
        return to_str(self)


def simplify(x):
    """Collapse a Scalar with zero irrational part to a Fraction."""
    if isinstance(x, Scalar):
        return x.a if x.b == 0 else x
    return Fraction(x)


def sign(x) -> int:
    if isinstance(x, Scalar) and x.b != 0:
        sa = (x.a > 0) - (x.a < 0)
        sb = (x.b > 0) - (x.b < 0)
        if sa == sb or sa == 0:
            return sb
        # opposite signs: the larger magnitude wins
        if x.a * x.a > x.d * x.b * x.b:
            return sa
        return sb
    x = simplify(x)
    return (x > 0) - (x < 0)


def sqrt(q) -> Number:
    """Exact square root of a non-negative rational, in Q(sqrt(d))."""
    r, d = rational_sqrt(Fraction(q))
    return simplify(Scalar(0, r, d)) if d > 1 else r


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_str(x) -> str:
    """Canonical text form, e.g. ``-3/2``, ``1/2+3*sqrt(5)``, ``-sqrt(2)``."""
    x = simplify(x)
    if not isinstance(x, Scalar):
        return _frac_str(x)
    head = "" if x.a == 0 else _frac_str(x.a)
    b = x.b
    if b == 1:
        tail = f"sqrt({x.d})"
    elif b == -1:
        tail = f"-sqrt({x.d})"
    else:
        tail = f"{_frac_str(b)}*sqrt({x.d})"
    if head and not tail.startswith("-"):
        tail = "+" + tail
    return head + tail


_NUM = r"\d+(?:/\d+)?"
_SURD_RE = re.compile(rf"^(?P<bs>[+-])?(?:(?P<b>{_NUM})\*)?sqrt\((?P<d>\d+)\)$")
_SCALAR_RE = re.compile(rf"^(?P<a>[+-]?{_NUM})(?:(?P<bs>[+-])(?:(?P<b>{_NUM})\*)?sqrt\((?P<d>\d+)\))?$")


def parse(text) -> Number:
    """Inverse of :func:`to_str`; also accepts plain integers and ``a/b``."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, dict):
        return simplify(Scalar(Fraction(text.get("a", "0")), Fraction(text.get("b", "0")), int(text.get("d", 0))))
    if not isinstance(text, str):
        raise TypeError(f"expected an exact scalar literal, got {text!r}")
    compact = re.sub(r"\s*([-+*/()])\s*", r"\1", text.strip())
    m = _SURD_RE.match(compact) or _SCALAR_RE.match(compact)
    if m is None:
        raise ValueError(f"malformed exact scalar literal {text!r}")
    groups = m.groupdict()
    a = Fraction(groups["a"]) if groups.get("a") else Fraction(0)
    if groups["d"] is None:
        return a
    b = Fraction(groups["b"]) if groups["b"] else Fraction(1)
    if groups["bs"] == "-":
        b = -b
    return simplify(Scalar(a, b, int(groups["d"])))


def to_json(x):
    """JSON literal: ``"a/b"`` for rationals, ``{"a","b","d"}`` otherwise."""
    x = simplify(x)
    if isinstance(x, Scalar):
        return {"a": _frac_str(x.a), "b": _frac_str(x.b), "d": x.d}
    return _frac_str(x)
