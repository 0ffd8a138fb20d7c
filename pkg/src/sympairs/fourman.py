"""Four-manifold bookkeeping: T^2-bundles over T^2, Gompf sums, Pasternack's obstruction.

Bundles are described in the normal form of the Sakamoto-Fukuhara table:
two monodromy matrices (C, D) for the generators of pi_1(T^2) and an Euler
class (m, n).  Inputs that are not already in one of the tabulated normal
forms are rejected rather than reduced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

I2 = ((1, 0), (0, 1))
MINUS_I2 = ((-1, 0), (0, -1))

GEOMETRY_ALGEBRA = {
    "R^4": "abelian4",
    "Nil^3xR": "nil3xR",
    "Nil^4": "nil4",
    "Sol^3xR": "sol3xR",
}


class NotInTableError(ValueError):
    pass


@dataclass(frozen=True)
class T2BundleData:
    C: tuple
    D: tuple = I2
    euler: tuple = (0, 0)
    lam: int | None = None

    def __post_init__(self):
        C = tuple(tuple(int(x) for x in row) for row in self.C)
        D = tuple(tuple(int(x) for x in row) for row in self.D)
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "euler", tuple(int(x) for x in self.euler))
        if C[0][0] * C[1][1] - C[0][1] * C[1][0] != 1:
            raise ValueError(f"monodromy {C} is not in SL(2, Z)")
        if D not in (I2, MINUS_I2):
            raise ValueError("second monodromy must be I or -I")

    @property
    def trace(self) -> int:
        return self.C[0][0] + self.C[1][1]


# row (c): the seven combinations printed in the table
CASE_C = (
    (((0, -1), (1, -1)), (0, 0)),
    (((0, -1), (1, -1)), (-1, 0)),
    (((0, -1), (1, 0)), (0, 0)),
    (((0, -1), (1, 0)), (-1, 0)),
    (((1, -1), (1, 0)), (0, 0)),
    (MINUS_I2, (0, 0)),
    (MINUS_I2, (-1, 0)),
)


def _shear(C, diag: int):
    """lambda if C == [[diag, lambda], [0, diag]] with lambda != 0, else None."""
    if C[0][0] == diag and C[1][1] == diag and C[1][0] == 0 and C[0][1] != 0:
        return C[0][1]
    return None


def _lam_ok(b: T2BundleData, lam) -> bool:
    return lam is not None and (b.lam is None or b.lam == lam)


ROWS: list[tuple[str, int, str, Callable[[T2BundleData], bool]]] = [
    ("a", 4, "R^4", lambda b: b.C == I2 and b.D == I2 and b.euler == (0, 0)),
    ("b", 3, "Nil^3xR", lambda b: b.C == I2 and b.D == I2 and b.euler != (0, 0)),
    ("c", 2, "R^4", lambda b: b.D == I2 and (b.C, b.euler) in CASE_C),
    ("d", 2, "Nil^4", lambda b: b.D == I2 and _lam_ok(b, _shear(b.C, 1)) and b.euler[1] != 0),
    ("e", 2, "Nil^3xR", lambda b: b.D == I2 and _lam_ok(b, _shear(b.C, -1))),
    ("f", 2, "Nil^3xR", lambda b: b.D == MINUS_I2 and _lam_ok(b, _shear(b.C, 1))),
    ("g", 2, "Sol^3xR", lambda b: b.D == I2 and abs(b.trace) >= 3),
    ("h", 2, "Sol^3xR", lambda b: b.D == MINUS_I2 and b.trace >= 3),
]


def matching_rows(b: T2BundleData) -> list[str]:
    return [label for label, _, _, pred in ROWS if pred(b)]


def classify_t2_bundle(b: T2BundleData) -> dict:
    rows = matching_rows(b)
    if not rows:
        raise NotInTableError(f"{b} is not in table normal form")
    if len(rows) > 1:
        raise NotInTableError(f"{b} matches several rows: {rows}")
    label = rows[0]
    _, b1, geom, _ = next(r for r in ROWS if r[0] == label)
    out = {"row": label, "b1": b1, "geometry": geom, "algebra": GEOMETRY_ALGEBRA[geom]}
    if label in ("e", "f"):
        # no pair invariant under the full isometry group; see coordforms.nil3_infranil_pair
        out["route"] = "coordforms"
    elif label in ("g", "h"):
        out["route"] = "coordforms+invariant"
    else:
        out["route"] = "invariant"
    return out


def table_instances() -> list[tuple[T2BundleData, str, int, str]]:
    """One or more concrete bundles per printed row, with the expected answer."""
    inst = [
        (T2BundleData(I2, I2, (0, 0)), "a", 4, "R^4"),
        (T2BundleData(I2, I2, (2, 5)), "b", 3, "Nil^3xR"),
        (T2BundleData(I2, I2, (0, 1)), "b", 3, "Nil^3xR"),
    ]
    inst += [(T2BundleData(C, I2, e), "c", 2, "R^4") for C, e in CASE_C]
    inst += [
        (T2BundleData(((1, 2), (0, 1)), I2, (0, 1)), "d", 2, "Nil^4"),
        (T2BundleData(((1, -1), (0, 1)), I2, (3, -2)), "d", 2, "Nil^4"),
        (T2BundleData(((-1, 1), (0, -1)), I2, (0, 0)), "e", 2, "Nil^3xR"),
        (T2BundleData(((-1, 3), (0, -1)), I2, (1, 2)), "e", 2, "Nil^3xR"),
        (T2BundleData(((1, 1), (0, 1)), MINUS_I2, (0, 0)), "f", 2, "Nil^3xR"),
        (T2BundleData(((1, -2), (0, 1)), MINUS_I2, (1, 1)), "f", 2, "Nil^3xR"),
        (T2BundleData(((2, 1), (1, 1)), I2, (0, 0)), "g", 2, "Sol^3xR"),
        (T2BundleData(((-3, 1), (-1, 0)), I2, (1, 0)), "g", 2, "Sol^3xR"),
        (T2BundleData(((2, 1), (1, 1)), MINUS_I2, (0, 0)), "h", 2, "Sol^3xR"),
        (T2BundleData(((3, 1), (-1, 0)), MINUS_I2, (2, 3)), "h", 2, "Sol^3xR"),
    ]
    return inst


# -- Gompf sums -------------------------------------------------------------


@dataclass(frozen=True)
class LeafData:
    genus: int
    area: Fraction
    trivial_normal_bundle: bool = True
    product_neighbourhood: bool = True

    def __post_init__(self):
        object.__setattr__(self, "area", Fraction(self.area))
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.area <= 0:
            raise ValueError("leaf area must be positive")


@dataclass(frozen=True)
class PairedManifoldDescriptor:
    """chi, sigma and the first Pontryagin numbers of the two foliations.

    ``leaves`` are closed leaves of the first foliation F.
    """

    chi: int
    sigma: int
    p1_F: int
    p1_G: int
    leaves: tuple = field(default=())
    provenance: str = "input"

    def __post_init__(self):
        object.__setattr__(self, "leaves", tuple(self.leaves))

    @property
    def consistent(self) -> bool:
        return self.p1_F + self.p1_G == 3 * self.sigma

    def to_json(self) -> dict:
        return {
            "chi": self.chi,
            "sigma": self.sigma,
            "p1_F": self.p1_F,
            "p1_G": self.p1_G,
            "leaves": [
                {"genus": l.genus, "area": str(l.area), "trivial_normal_bundle": l.trivial_normal_bundle,
                 "product_neighbourhood": l.product_neighbourhood}
                for l in self.leaves
            ],
            "provenance": self.provenance,
        }


def surface_bundle_descriptor(sigma: int, base_genus: int, fiber_genus: int,
                              horizontal_leaf_area=1, fiber_area=1) -> tuple:
    """Foliated surface bundle with flat symplectic holonomy.

    Returns the descriptor oriented two ways: with F the vertical foliation
    (fibers as leaves) and with F the horizontal one (sections as leaves).
    The horizontal tangent bundle has p1 = 0 and the vertical one 3 sigma.
    """
    chi = (2 - 2 * base_genus) * (2 - 2 * fiber_genus)
    vertical = PairedManifoldDescriptor(chi, sigma, 3 * sigma, 0, (LeafData(fiber_genus, fiber_area),))
    horizontal = PairedManifoldDescriptor(chi, sigma, 0, 3 * sigma, (LeafData(base_genus, horizontal_leaf_area),))
    return vertical, horizontal


@dataclass(frozen=True)
class GompfFeasibility:
    feasible: bool
    scale: Fraction | None
    reason: str = ""


def gompf_feasible(leaf1: LeafData, leaf2: LeafData) -> GompfFeasibility:
    """Can two closed leaves be matched by an area-preserving map after scaling?

    The scale multiplies the second pair's leafwise form so the areas agree.
    """
    for tag, leaf in (("first", leaf1), ("second", leaf2)):
        if not leaf.trivial_normal_bundle:
            return GompfFeasibility(False, None, f"{tag} leaf has non-trivial normal bundle")
        if not leaf.product_neighbourhood:
            return GompfFeasibility(False, None, f"{tag} leaf has no product neighbourhood")
    if leaf1.genus != leaf2.genus:
        return GompfFeasibility(False, None, f"genus {leaf1.genus} != {leaf2.genus}")
    return GompfFeasibility(True, leaf1.area / leaf2.area)


class InconsistentDescriptor(ValueError):
    pass


def gompf_invariants(d1: PairedManifoldDescriptor, d2: PairedManifoldDescriptor, genus: int,
                     leaf1: LeafData | None = None, leaf2: LeafData | None = None) -> PairedManifoldDescriptor:
    """chi and sigma of the sum along a genus-g leaf, with the p1 ledger added up.

    Additivity of chi (minus twice the leaf) and of sigma is the usual
    gluing arithmetic; the result is tagged ``derived-standard``.
    """
    for tag, d in (("first", d1), ("second", d2)):
        if not d.consistent:
            raise InconsistentDescriptor(f"{tag} descriptor violates p1(TF) + p1(TG) = 3 sigma")
    l1 = leaf1 or next((l for l in d1.leaves if l.genus == genus), None)
    l2 = leaf2 or next((l for l in d2.leaves if l.genus == genus), None)
    if l1 is None or l2 is None:
        raise ValueError(f"no closed leaf of genus {genus} to glue along")
    feas = gompf_feasible(l1, l2)
    if not feas.feasible or l1.genus != genus:
        raise ValueError(f"Gompf sum not feasible: {feas.reason or 'genus mismatch'}")
    out = PairedManifoldDescriptor(
        chi=d1.chi + d2.chi - 2 * (2 - 2 * genus),
        sigma=d1.sigma + d2.sigma,
        p1_F=d1.p1_F + d2.p1_F,
        p1_G=d1.p1_G + d2.p1_G,
        leaves=(),
        provenance="derived-standard",
    )
    if not out.consistent:
        raise InconsistentDescriptor("p1 ledger of the sum is inconsistent")
    return out


def pasternack_obstruction(p1_normal: int, codim: int) -> str:
    """``"no"`` when a Riemannian foliation is ruled out, else ``"unknown"``.

    For a Riemannian foliation of codimension q the normal Pontryagin numbers
    vanish in degrees > q; p1 sits in degree 4.
    """
    if codim < 1:
        raise ValueError("codimension must be positive")
    if p1_normal != 0 and 4 > codim:
        return "no"
    return "unknown"
