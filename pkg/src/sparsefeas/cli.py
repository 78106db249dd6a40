"""Command-line front end.

One subcommand per capability, one JSON document per invocation on
stdout; human diagnostics go to stderr.  Exit codes: 0 success, 1 domain
error (bad input values, undecidable within precision), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import product

from .discriminant import (
    CircuitDiscriminant,
    DegeneratePoint,
    adisc_sign,
    adisc_vanish,
)
from .errors import SparseFeasError
from .feasibility import (
    FeasibilityReport,
    feas_real_full,
    feas_simplex,
    topology_report,
    _positive_classification,
    _NONEMPTY_TAGS,
)
from .geometry import find_circuit
from .oracle import exact_product_compare, grid_scan, sturm_count
from .reductions import PolySystem, Sat3Formula, sat3_to_system, shor_normal_form, sos_aggregate
from .sparsepoly import (
    PointSet,
    SparsePolynomial,
    evaluate,
    from_json,
    parse,
    to_json,
    to_text,
)


def _serialize(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, DegeneratePoint):
        if obj.coordinates is not None:
            coords = [str(c) for c in obj.coordinates]
            return coords[0] if len(coords) == 1 else coords
        return {
            "rhos": [str(r) for r in obj.rhos],
            "orders": list(obj.orders),
            "mixing": [list(row) for row in obj.mixing],
        }
    if isinstance(obj, dict):
        return {k: _serialize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_serialize(v) for v in obj]
    return obj


def _load_poly(args) -> SparsePolynomial:
    if getattr(args, "expr", None):
        return parse(args.expr)
    if getattr(args, "file", None):
        with open(args.file) as fh:
            return from_json(json.load(fh))
    raise SparseFeasError("one of --expr or --file is required")


def _emit(payload) -> int:
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")
    return 0


def _cmd_parse(args) -> int:
    f = _load_poly(args)
    payload = to_json(f)
    payload["text"] = to_text(f)
    return _emit(payload)


def _cmd_feas(args) -> int:
    f = _load_poly(args)
    if args.set == "positive":
        cls, cert = _positive_classification(f)
        verdict = "nonempty" if cls in _NONEMPTY_TAGS else "empty"
        payload = {
            "set": "positive",
            "verdict": verdict,
            "classification": cls,
            "witness": _serialize(cert),
        }
    else:
        rep = feas_real_full(f)
        verdict = rep.nonzero_reals if args.set == "nonzero" else rep.all_reals
        payload = {
            "set": args.set,
            "verdict": verdict,
            "classification": rep.classification,
            "witness": _serialize(rep.certificate),
        }
    return _emit(payload)


def _parse_points(text: str):
    chunks = text.split(";")
    if len(chunks) == 1:
        vals = [int(v) for v in text.split(",")]
        return PointSet(tuple((v,) for v in vals))
    return PointSet(tuple(tuple(int(v) for v in c.split(",")) for c in chunks))


def _cmd_disc(args) -> int:
    pts = _parse_points(args.support)
    coeffs = tuple(int(v) for v in args.coeffs.split(","))
    located = find_circuit(pts)
    if located is None or len(located[0].points) != len(pts):
        raise SparseFeasError("support is not a circuit")
    C, idx = located
    D = CircuitDiscriminant(C, tuple(coeffs[i] for i in idx))
    if args.which == "vanish":
        return _emit({"vanish": adisc_vanish(D)})
    return _emit({"sign": adisc_sign(D)})


def _cmd_topology(args) -> int:
    f = _load_poly(args)
    return _emit(_serialize(topology_report(f)))


def _read_dimacs(path: str) -> Sat3Formula:
    num_vars = 0
    clauses = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("c"):
                continue
            if line.startswith("p"):
                parts = line.split()
                num_vars = int(parts[2])
                continue
            lits = [int(v) for v in line.split()]
            if lits and lits[-1] == 0:
                lits.pop()
            if lits:
                clauses.append(tuple(lits))
    return Sat3Formula(num_vars, tuple(clauses))


def _system_json(F: PolySystem):
    return {"n": F.n, "polynomials": [to_json(p) for p in F.polynomials]}


def _load_system(args) -> PolySystem:
    with open(args.file) as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "polynomials" in data:
        data = data["polynomials"]
    return PolySystem(tuple(from_json(p) for p in data))


def _brute_force_binary(F: PolySystem) -> bool:
    n = F.n
    for bits in product((0, 1), repeat=n):
        if all(evaluate(p, bits[: p.n]) == 0 for p in F.polynomials):
            return True
    return False


def _cmd_reduce(args) -> int:
    if args.gadget == "sat3":
        phi = _read_dimacs(args.dimacs)
        F = sat3_to_system(phi)
        payload = _system_json(F)
        if args.brute_force:
            payload["satisfiable"] = _brute_force_binary(F)
        return _emit(payload)
    F = _load_system(args)
    if args.gadget == "shor":
        return _emit(_system_json(shor_normal_form(F)))
    g = sos_aggregate(F)
    payload = to_json(g)
    payload["term_count"] = len(g.terms)
    return _emit(payload)


def _fraction_or_none(text):
    if text is None or text in ("-inf", "inf", ""):
        return None
    return Fraction(text)


def _cmd_oracle(args) -> int:
    if args.probe == "sturm":
        f = _load_poly(args)
        count = sturm_count(
            f, _fraction_or_none(args.lower), _fraction_or_none(args.upper)
        )
        return _emit({"count": count})
    if args.probe == "grid":
        f = _load_poly(args)
        box = [
            tuple(Fraction(v) for v in chunk.split(","))
            for chunk in args.box.split(";")
        ]
        cert = grid_scan(f, box, Fraction(args.resolution))
        return _emit({"certificate": _serialize(cert)})
    alphas = [int(v) for v in args.alphas.split(",")]
    betas = [int(v) for v in args.betas.split(",")]
    us = [int(v) for v in args.us.split(",")]
    vs = [int(v) for v in args.vs.split(",")]
    return _emit({"sign": exact_product_compare(alphas, betas, us, vs)})


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sparsefeas",
        description="Exact feasibility and topology for sparse polynomials",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_poly_args(p):
        p.add_argument("--expr", help="polynomial expression text")
        p.add_argument("--file", help="polynomial JSON file")

    p = sub.add_parser("parse", help="parse and canonicalize a polynomial")
    add_poly_args(p)
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("feas", help="decide a root set")
    p.add_argument("--set", choices=("positive", "nonzero", "real"), required=True)
    add_poly_args(p)
    p.set_defaults(func=_cmd_feas)

    p = sub.add_parser("disc", help="circuit discriminant tests")
    p.add_argument("which", choices=("vanish", "sign"))
    p.add_argument("--support", required=True, help="points, ';'-separated")
    p.add_argument("--coeffs", required=True, help="comma-separated integers")
    p.set_defaults(func=_cmd_disc)

    p = sub.add_parser("topology", help="positive zero set topology report")
    add_poly_args(p)
    p.set_defaults(func=_cmd_topology)

    p = sub.add_parser("reduce", help="hardness reduction gadgets")
    p.add_argument("gadget", choices=("sat3", "shor", "sos"))
    p.add_argument("--dimacs", help="DIMACS CNF file (sat3)")
    p.add_argument("--file", help="polynomial system JSON file (shor, sos)")
    p.add_argument("--brute-force", action="store_true", dest="brute_force")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("oracle", help="independent brute-force checks")
    p.add_argument("probe", choices=("sturm", "grid", "product"))
    add_poly_args(p)
    p.add_argument("--lower")
    p.add_argument("--upper")
    p.add_argument("--box", help="per-variable lo,hi pairs, ';'-separated")
    p.add_argument("--resolution")
    p.add_argument("--alphas")
    p.add_argument("--betas")
    p.add_argument("--us")
    p.add_argument("--vs")
    p.set_defaults(func=_cmd_oracle)
    return ap


def run(argv) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except SparseFeasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, ZeroDivisionError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
