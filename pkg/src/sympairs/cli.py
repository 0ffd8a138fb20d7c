"""Command line interface.

Exit codes: 0 when the check passes or the question is decided, 1 when the
input is well formed but fails verification, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .boothbywang import (
    InvalidPairError,
    NotClosedError,
    bw_contact_pair_from_cs,
    bw_contact_symplectic,
    torus_extension,
)
from .catalog import catalog_get
from .coordforms import check_coordinate_pair, default_samples, generic_rank, invariance_check, pd
from .fourman import (
    I2,
    MINUS_I2,
    LeafData,
    NotInTableError,
    PairedManifoldDescriptor,
    T2BundleData,
    classify_t2_bundle,
    gompf_feasible,
    gompf_invariants,
    pasternack_obstruction,
)
from .io import (
    SCHEMA,
    InputError,
    algebra_from_json,
    algebra_to_json,
    form_from_json,
    form_to_json,
    polyform_from_json,
    polymap_from_json,
    scalar_from_json,
)
from .lie import JacobiError
from .pairs import check_contact_pair, check_contact_symplectic_pair, check_symplectic_pair
from .reproduce import reproduce_paper
from .search import construct_pair_witness, has_invariant_symplectic


class Context:
    def __init__(self, args):
        self.args = args
        self.digests: dict[str, str] = {}

    def load_json(self, source: str):
        path = Path(source)
        try:
            raw = path.read_bytes()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
        self.digests[source] = hashlib.sha256(raw).hexdigest()
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise InputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None

    def load_algebra(self, source: str):
        if source.startswith("catalog:"):
            name = source.split(":", 1)[1]
            self.digests[source] = "catalog"
            try:
                return catalog_get(name).algebra
            except (KeyError, ValueError) as exc:
                raise InputError(str(exc)) from None
        try:
            return algebra_from_json(self.load_json(source))
        except JacobiError as exc:
            raise InputError(str(exc)) from None

    def manifest(self, outcome: str) -> dict:
        return {
            "command": self.args.command,
            "inputs": dict(sorted(self.digests.items())),
            "version": __version__,
            "seed": self.args.seed,
            "outcome": outcome,
        }


def _forms(obj) -> list:
    if isinstance(obj, dict) and "forms" in obj:
        obj = obj["forms"]
    if not isinstance(obj, list):
        raise InputError("expected a list of forms or {\"forms\": [...]}")
    return [form_from_json(f) for f in obj]


def _pair_check(g, forms):
    degs = tuple(f.degree for f in forms)
    if degs == (2, 2):
        return check_symplectic_pair(g, *forms)
    if degs == (1, 2):
        return check_contact_symplectic_pair(g, *forms)
    if degs == (1, 1):
        return check_contact_pair(g, *forms)
    raise InputError(f"no pair notion for form degrees {degs}")


def cmd_check_pair(ctx: Context):
    g = ctx.load_algebra(ctx.args.algebra)
    forms = _forms(ctx.load_json(ctx.args.forms))
    if len(forms) != 2:
        raise InputError("a pair needs exactly two forms")
    try:
        rep = _pair_check(g, forms)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    ok = rep.verdict
    return (0 if ok else 1), rep.to_json(), [f"{k}: {'ok' if v else 'FAIL'}" for k, v in rep.axioms.items()]


def cmd_bw_extend(ctx: Context):
    g = ctx.load_algebra(ctx.args.algebra)
    forms = _forms(ctx.load_json(ctx.args.forms))
    degs = tuple(f.degree for f in forms)
    try:
        if ctx.args.twice:
            if degs != (2, 2):
                raise InputError("--twice needs a symplectic pair")
            res = torus_extension(g, *forms)
        elif degs == (2, 2):
            res = bw_contact_symplectic(g, *forms)
        elif degs == (1, 2):
            res = bw_contact_pair_from_cs(g, *forms)
        else:
            raise InputError(f"cannot extend along forms of degrees {degs}")
    except (InvalidPairError, NotClosedError) as exc:
        body = {"error": str(exc)}
        rep = getattr(exc, "report", None)
        if rep is not None:
            body["input_report"] = rep.to_json()
        return 1, body, [str(exc)]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    body = {
        "algebra": algebra_to_json(res.algebra),
        "forms": [form_to_json(f) for f in res.forms],
        "report": res.report.to_json(),
        "assumptions": ["integrality of the curvature classes is assumed, not checked"],
    }
    return (0 if res.report.verdict else 1), body, [f"extended to dimension {res.algebra.dim}: {'pass' if res.report else 'fail'}"]


def cmd_search_pair(ctx: Context):
    g = ctx.load_algebra(ctx.args.algebra)
    if g.dim != 4:
        raise InputError("search-pair works on 4-dimensional algebras")
    w = construct_pair_witness(g)
    body = {
        "symplectic": has_invariant_symplectic(g),
        "pair": w.found,
        "signature": list(w.signature.as_tuple()),
        "witness": [form_to_json(f) for f in w.forms] if w.found else None,
        "field": {"d": w.field_d} if w.field_d else None,
        "certificate": None if w.found else w.gram.to_json(),
    }
    return 0, body, [f"symplectic form: {body['symplectic']}, symplectic pair: {body['pair']}"]


def cmd_coord_check(ctx: Context):
    data = ctx.load_json(ctx.args.input)
    if not isinstance(data, dict) or "forms" not in data:
        raise InputError("coord-check input needs a \"forms\" list")
    forms = [polyform_from_json(f) for f in data["forms"]]
    if not forms:
        raise InputError("no forms given")
    n = forms[0].dim
    maps = [polymap_from_json(m, n) for m in data.get("maps", [])]
    samples = data.get("samples", "default")
    pts = default_samples(n) if samples == "default" else [tuple(Fraction(scalar_from_json(x)) for x in p) for p in samples]
    try:
        per_form = []
        for f in forms:
            entry = {"closed": pd(f).is_zero(), "invariant": invariance_check(f, maps)}
            if f.degree == 2:
                r = generic_rank(f, pts)
                entry["rank"] = {k: r[k] for k in ("square_identically_zero", "min_rank", "max_rank",
                                                   "nonvanishing_certificate", "constant_rank_2_certified")}
            per_form.append(entry)
        body = {"forms": per_form, "samples": len(pts)}
        ok = all(e["closed"] and all(e["invariant"]) for e in per_form)
        if len(forms) == 2 and all(f.degree == 2 for f in forms):
            body["pair"] = check_coordinate_pair(*forms, pts)
            ok = ok and body["pair"]["pointwise_pair"] and body["pair"]["volume_multiple"] is not None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return (0 if ok else 1), body, [f"coordinate check: {'pass' if ok else 'fail'}"]


def _int_list(text: str, n: int, label: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"{label} must be {n} comma-separated integers") from None
    if len(vals) != n:
        raise InputError(f"{label} must be {n} comma-separated integers")
    return vals


def cmd_classify_bundle(ctx: Context):
    a = ctx.args
    c = _int_list(a.C, 4, "--C")
    if a.D not in ("I", "-I"):
        raise InputError("--D must be I or -I")
    euler = _int_list(a.euler, 2, "--euler")
    try:
        b = T2BundleData(((c[0], c[1]), (c[2], c[3])), I2 if a.D == "I" else MINUS_I2, tuple(euler), a.lam)
        res = classify_t2_bundle(b)
    except NotInTableError as exc:
        return 1, {"row": None, "error": str(exc)}, [str(exc)]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return 0, {"row": res["row"], "b1": res["b1"], "geometry": res["geometry"]}, \
        [f"row ({res['row']}), b1 = {res['b1']}, {res['geometry']}"]


def descriptor_from_json(obj) -> PairedManifoldDescriptor:
    try:
        leaves = [
            LeafData(int(l["genus"]), Fraction(l["area"]), bool(l.get("trivial_normal_bundle", True)),
                     bool(l.get("product_neighbourhood", True)))
            for l in obj.get("leaves", [])
        ]
        return PairedManifoldDescriptor(int(obj["chi"]), int(obj["sigma"]), int(obj["p1_F"]), int(obj["p1_G"]), leaves)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad descriptor literal: {exc}") from None


def cmd_gompf(ctx: Context):
    d1 = descriptor_from_json(ctx.load_json(ctx.args.first))
    d2 = descriptor_from_json(ctx.load_json(ctx.args.second))
    if not d1.leaves or not d2.leaves:
        raise InputError("each descriptor needs at least one closed leaf")
    l1, l2 = d1.leaves[0], d2.leaves[0]
    feas = gompf_feasible(l1, l2)
    body = {"feasible": feas.feasible, "scale": None if feas.scale is None else str(feas.scale), "reason": feas.reason}
    if not feas.feasible:
        return 1, body, [f"infeasible: {feas.reason}"]
    try:
        s = gompf_invariants(d1, d2, l1.genus, l1, l2)
    except ValueError as exc:
        return 1, dict(body, error=str(exc)), [str(exc)]
    body["sum"] = s.to_json()
    body["riemannian_F"] = pasternack_obstruction(s.p1_G, 2)
    body["riemannian_G"] = pasternack_obstruction(s.p1_F, 2)
    return 0, body, [f"sum: chi = {s.chi}, sigma = {s.sigma}, scale = {feas.scale}"]


def cmd_reproduce_paper(ctx: Context):
    checks = reproduce_paper()
    ok = all(c.ok for c in checks)
    lines = [f"[{'PASS' if c.ok else 'FAIL'}] {c.name}: {c.detail}" for c in checks]
    return (0 if ok else 1), {"checks": [c.to_json() for c in checks], "passed": sum(c.ok for c in checks),
                              "total": len(checks)}, lines


COMMANDS = {
    "check-pair": cmd_check_pair,
    "bw-extend": cmd_bw_extend,
    "search-pair": cmd_search_pair,
    "coord-check": cmd_coord_check,
    "classify-bundle": cmd_classify_bundle,
    "gompf": cmd_gompf,
    "reproduce-paper": cmd_reproduce_paper,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sympairs", description="Exact checks for symplectic, contact-symplectic and contact pairs.")
    p.add_argument("--seed", type=int, default=0, help="seed recorded in the manifest")
    p.add_argument("--json", action="store_true", help="machine-readable output only")
    p.add_argument("--quiet", action="store_true", help="suppress the human summary")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-pair", help="verify a symplectic / contact-symplectic / contact pair")
    s.add_argument("algebra", help="algebra JSON file or catalog:NAME")
    s.add_argument("forms", help="JSON with two forms")

    s = sub.add_parser("bw-extend", help="Boothby-Wang central extension")
    s.add_argument("algebra")
    s.add_argument("forms")
    s.add_argument("--twice", action="store_true", help="extend along both forms (torus bundle)")

    s = sub.add_parser("search-pair", help="decide existence of invariant pairs in dimension 4")
    s.add_argument("algebra")

    s = sub.add_parser("coord-check", help="check polynomial forms on a chart")
    s.add_argument("input")

    s = sub.add_parser("classify-bundle", help="look up a T^2-bundle over T^2 in the table")
    s.add_argument("--C", required=True, help="a,b,c,d for [[a,b],[c,d]]")
    s.add_argument("--D", required=True, help="I or -I")
    s.add_argument("--euler", required=True, help="m,n")
    s.add_argument("--lambda", dest="lam", type=int, default=None)

    s = sub.add_parser("gompf", help="Gompf sum bookkeeping for two paired 4-manifolds")
    s.add_argument("first")
    s.add_argument("second")

    sub.add_parser("reproduce-paper", help="re-run every worked example")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    ctx = Context(args)
    try:
        code, body, lines = COMMANDS[args.command](ctx)
    except InputError as exc:
        code, body, lines = 2, {"error": str(exc)}, [f"error: {exc}"]
    outcome = {0: "pass", 1: "fail", 2: "input-error"}[code]
    doc = {"schema": SCHEMA, "manifest": ctx.manifest(outcome), "result": body}
    if args.command == "reproduce-paper" and not args.json:
        if not args.quiet:
            print("\n".join(lines))
        print(f"{body.get('passed', 0)}/{body.get('total', 0)} checks passed" if code != 2 else lines[0])
        return code
    print(json.dumps(doc, sort_keys=True, indent=2))
    if not args.json and not args.quiet:
        for line in lines:
            print(line, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
