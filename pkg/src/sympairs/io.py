"""JSON literals for scalars, forms, algebras and polynomials."""

from __future__ import annotations

from fractions import Fraction

from . import scalar
from .coordforms import Poly, PolyForm, PolyMap
from .exterior import ExteriorForm
from .lie import LieAlgebra

SCHEMA = 1


class InputError(ValueError):
    """Malformed user input (maps to exit code 2 on the command line)."""


def scalar_to_json(x):
    return scalar.to_json(x)


def scalar_from_json(obj):
    try:
        return scalar.parse(obj)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coefficient {obj!r}: {exc}") from None


def form_to_json(phi: ExteriorForm) -> dict:
    return {
        "dim": phi.dim,
        "degree": phi.degree,
        "terms": [{"idx": list(idx), "c": scalar.to_json(c)} for idx, c in phi.terms.items()],
    }


def form_from_json(obj) -> ExteriorForm:
    try:
        dim, degree = int(obj["dim"]), int(obj["degree"])
        terms = [(tuple(t["idx"]), scalar_from_json(t["c"])) for t in obj.get("terms", [])]
        return ExteriorForm(dim, degree, terms)
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad form literal: {exc}") from None


def algebra_to_json(g: LieAlgebra) -> dict:
    return {
        "dim": g.dim,
        "name": g.name,
        "brackets": [
            {"i": i, "j": j, "out": {str(k): scalar.to_json(c) for k, c in row.items()}}
            for (i, j), row in g.brackets.items()
        ],
    }


def algebra_from_json(obj, check: bool = True) -> LieAlgebra:
    try:
        br: dict = {}
        for b in obj.get("brackets", []):
            key = (int(b["i"]), int(b["j"]))
            row = br.setdefault(key, {})
            for k, c in b["out"].items():
                row[int(k)] = row.get(int(k), Fraction(0)) + scalar_from_json(c)
        return LieAlgebra(int(obj["dim"]), br, name=obj.get("name", ""), check=check)
    except InputError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"bad algebra literal: {exc}") from None


def poly_from_json(obj, nvars: int) -> Poly:
    if isinstance(obj, (int, str)):
        return Poly.const(nvars, Fraction(scalar_from_json(obj)))
    try:
        return Poly(nvars, [(tuple(t["exp"]), Fraction(scalar_from_json(t["c"]))) for t in obj["terms"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad polynomial literal: {exc}") from None


def poly_to_json(p: Poly) -> dict:
    return {"terms": [{"exp": list(e), "c": scalar_to_json(c)} for e, c in p.terms.items()]}


def polyform_from_json(obj) -> PolyForm:
    try:
        n, p = int(obj["dim"]), int(obj["degree"])
        terms = [(tuple(t["idx"]), poly_from_json(t.get("poly", t.get("c", "1")), n)) for t in obj.get("terms", [])]
        return PolyForm(n, p, terms)
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad polynomial form literal: {exc}") from None


def polymap_from_json(obj, nvars: int) -> PolyMap:
    comps = obj["components"] if isinstance(obj, dict) else obj
    return PolyMap([poly_from_json(c, nvars) for c in comps])


def polyform_to_json(phi: PolyForm) -> dict:
    return {"dim": phi.dim, "degree": phi.degree,
            "terms": [{"idx": list(i), "poly": poly_to_json(f)} for i, f in phi.terms.items()]}
