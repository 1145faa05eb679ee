"""Command-line surface: every subcommand is a deterministic, exact
computation with canonical JSON (sorted keys) or CSV output.

Exit codes: 0 success, 1 domain error (machine-readable code on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import cliffordf, curves, forms, gca
from ._parsing import ExprParser
from .errors import CubicliffordError
from .fields import FieldSpec, Scalar
from .freealg import parse_free_expression


class UsageError(Exception):
    pass


class _ScalarContext:
    def __init__(self, field):
        self.field = field

    def const(self, q):
        return self.field.scalar(q)

    def symbol(self, name, pos):
        if name == "w":
            return self.field.omega()
        raise UsageError(f"unknown symbol {name!r} in a scalar literal")

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def pow_int(a, n):
        return a**n


def parse_scalar_literal(field: FieldSpec, text: str) -> Scalar:
    try:
        return ExprParser(text.strip(), _ScalarContext(field)).parse()
    except CubicliffordError as err:
        raise UsageError(f"bad scalar literal {text!r}: {err}") from err


def field_from_args(args) -> FieldSpec:
    kind = args.field
    if kind == "Q":
        return FieldSpec.rationals()
    if kind == "Qw":
        return FieldSpec.cyclotomic()
    if args.p is None:
        raise UsageError("--field Fp requires --p")
    return FieldSpec.prime(args.p, args.omega)


def form_from_args(args, field) -> forms.BinaryCubicForm:
    if args.coeffs is None:
        raise UsageError("this subcommand requires --coeffs c0,c1,c2,c3")
    parts = [t for t in args.coeffs.split(",")]
    if len(parts) != 4:
        raise UsageError("--coeffs needs exactly 4 comma-separated values")
    values = [parse_scalar_literal(field, t) for t in parts]
    if args.threes:
        three = field.scalar(3)
        values[1] = values[1] * three
        values[2] = values[2] * three
    return forms.BinaryCubicForm(field, values)


def matrix_from_args(args, field) -> forms.GL2Element:
    if args.matrix is None:
        raise UsageError("this subcommand requires --matrix a,b,c,d")
    parts = args.matrix.split(",")
    if len(parts) != 4:
        raise UsageError("--matrix needs exactly 4 comma-separated values")
    return forms.GL2Element(field, [parse_scalar_literal(field, t) for t in parts])


def emit_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- subcommand handlers -------------------------------------------------------


def cmd_reduce(args, field):
    if args.expr is None:
        raise UsageError("reduce requires --expr")
    alg = gca.GenericCliffordAlgebra(field)
    return alg.reduce(parse_free_expression(args.expr, field)).to_json()


def cmd_verify_identities(args, field):
    report = gca.GenericCliffordAlgebra(field).verify_center_identities()
    passed = sum(1 for v in report.values() if v["pass"])
    return {"identities": report, "passed": passed, "total": len(report)}


def cmd_disc(args, field):
    return {"delta": form_from_args(args, field).discriminant().to_json()}


def cmd_act(args, field):
    g = matrix_from_args(args, field)
    f = form_from_args(args, field)
    return {"coeffs": [c.to_json() for c in forms.act_gl2(g, f).coeffs]}


def cmd_diagonalize(args, field):
    f = form_from_args(args, field)
    g, d = forms.diagonalize(f)
    return {"transform": g.to_json(), "diagonal": [c.to_json() for c in d.coeffs]}


def cmd_stab(args, field):
    return forms.stabilizer(form_from_args(args, field)).to_json()


def cmd_orbits(args, field):
    orbits = forms.orbit_enumerate(
        field,
        nondegenerate_only=args.nondegenerate,
        budget=args.budget if args.budget is not None else 10**9,
    )
    rows = [
        {
            "representative": list(o.representative),
            "size": o.size,
            "stabilizer_order": o.stabilizer_order,
            "delta": o.delta.to_json(),
            "delta_class6": o.delta_class6,
            "has_point": curves.point_search(o.representative_form()) is not None
            if not o.delta.is_zero()
            else None,
        }
        for o in orbits
    ]
    if args.format == "csv":
        out = io.StringIO()
        out.write("representative,size,stabilizer_order,delta,delta_class6,has_point\n")
        for r in rows:
            rep = " ".join(str(v) for v in r["representative"])
            cls = "" if r["delta_class6"] is None else r["delta_class6"]
            pt = "" if r["has_point"] is None else str(r["has_point"]).lower()
            out.write(f"{rep},{r['size']},{r['stabilizer_order']},{r['delta']},{cls},{pt}\n")
        return out.getvalue()
    return {"orbits": rows, "count": len(rows)}


def cmd_jacobian(args, field):
    return {"A": curves.jacobian_constant(form_from_args(args, field)).to_json()}


def cmd_torsion(args, field):
    f = form_from_args(args, field)
    a = curves.jacobian_constant(f)
    pts = curves.torsion_points(field, a)
    return {"A": a.to_json(), "points": [p.to_json() for p in pts], "order": len(pts)}


def cmd_lambda_kernel(args, field):
    f = form_from_args(args, field)
    a = curves.jacobian_constant(f)
    pts = curves.curve_points(field, a)
    kernel = [p for p in pts if curves.lambda_isogeny(p).is_infinity()]
    torsion = curves.torsion_points(field, a)
    return {
        "A": a.to_json(),
        "curve_order": len(pts),
        "kernel": [p.to_json() for p in kernel],
        "torsion": [p.to_json() for p in torsion],
        "kernel_equals_torsion": sorted(map(repr, kernel)) == sorted(map(repr, torsion)),
    }


def cmd_point_search(args, field):
    f = form_from_args(args, field)
    point = curves.point_search(f, args.budget)
    if point is None:
        return {"point": None, "status": "absent-within-budget"}
    return {"point": point.to_json(), "status": "found"}


def cmd_cover_point(args, field):
    f = form_from_args(args, field)
    point = curves.construct_cover_point(f, args.which)
    return {
        "point": point.to_json(),
        "field": "Fp3" if point.extension is not None else "Fp",
    }


def cmd_clifford_iso(args, field):
    g = matrix_from_args(args, field)
    f = form_from_args(args, field)
    return cliffordf.check_clifford_iso(g, f).to_json()


def cmd_symbol_check(args, field):
    return cliffordf.symbol_relations_check(form_from_args(args, field)).to_json()


def cmd_brauer_probe(args, field):
    f = form_from_args(args, field)
    return cliffordf.brauer_triviality_probe(f, args.budget).to_json()


def cmd_gamma_free(args, field):
    f = form_from_args(args, field)
    return {
        "independent": cliffordf.gamma_independence_check(f, args.bound),
        "bound": args.bound,
    }


_HANDLERS = {
    "reduce": cmd_reduce,
    "verify-identities": cmd_verify_identities,
    "disc": cmd_disc,
    "act": cmd_act,
    "diagonalize": cmd_diagonalize,
    "stab": cmd_stab,
    "orbits": cmd_orbits,
    "jacobian": cmd_jacobian,
    "torsion": cmd_torsion,
    "lambda-kernel": cmd_lambda_kernel,
    "point-search": cmd_point_search,
    "cover-point": cmd_cover_point,
    "clifford-iso": cmd_clifford_iso,
    "symbol-check": cmd_symbol_check,
    "brauer-probe": cmd_brauer_probe,
    "gamma-free": cmd_gamma_free,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubiclifford",
        description="Exact computations with binary cubic forms, their "
        "Clifford algebras, and the attached elliptic curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _HANDLERS:
        p = sub.add_parser(name)
        p.add_argument("--field", choices=("Q", "Qw", "Fp"), required=True)
        p.add_argument("--p", type=int, default=None, help="prime (Fp only)")
        p.add_argument("--omega", type=int, default=None, help="cube root of 1 mod p")
        p.add_argument("--coeffs", default=None, help="c0,c1,c2,c3")
        p.add_argument(
            "--threes",
            action="store_true",
            help="multiply the two middle input coefficients by 3 on ingestion",
        )
        p.add_argument("--expr", default=None, help="free-algebra expression")
        p.add_argument("--matrix", default=None, help="a,b,c,d")
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--seed", type=int, default=None, help="reserved; all subcommands are deterministic")
        p.add_argument("--bound", type=int, default=2, help="gamma-degree bound (gamma-free)")
        p.add_argument("--which", type=int, choices=(1, 2, 3, 4), default=1, help="cover index (cover-point)")
        p.add_argument(
            "--nondegenerate", action="store_true", help="restrict orbit enumeration"
        )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        field = field_from_args(args)
        result = _HANDLERS[args.command](args, field)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except CubicliffordError as err:
        print(emit_json({"error": err.code, "message": str(err)}), file=sys.stderr)
        return 1
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(emit_json(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
