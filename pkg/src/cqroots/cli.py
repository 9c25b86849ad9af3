"""Command line: ``cqroots {sqrt,mul,map,verify,sample} ...``.

Exit codes: 0 success (roots found / residual within tolerance), 1 no roots or
failed verification, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .expr import ParseError, format_element, format_number, parse
from .isomaps import CL30_CL12, COQUATERNION_CL12, default_map
from .mv import BLADES, CL12, CL30, Multivector3
from .quaternion import BASIS8, COQUATERNION, CONECTORINE, HAMILTON, NECTORINE, ComplexQuaternion
from .sqrt import ContinuumFamily, continuum_sample, sqrt_mv

ALGEBRAS = {
    "hamilton": HAMILTON,
    "coq": COQUATERNION,
    "con": CONECTORINE,
    "nec": NECTORINE,
    "cl30": CL30,
    "cl12": CL12,
}


class UsageError(Exception):
    pass


def _coeffs(x) -> np.ndarray:
    return x.basis8() if isinstance(x, ComplexQuaternion) else x.coeffs


def _labels(x) -> tuple[str, ...]:
    return BASIS8 if isinstance(x, ComplexQuaternion) else BLADES


def residual(R, B) -> float:
    return float(np.max(np.abs(_coeffs(R * R - B))))


def to_cl30(x) -> Multivector3:
    if isinstance(x, ComplexQuaternion):
        return default_map(x.family).forward(x)
    if x.sig == CL12:
        return CL30_CL12.backward(x)
    return x


def from_cl30(A: Multivector3, algebra):
    if algebra == CL30:
        return A
    if algebra == CL12:
        return CL30_CL12.forward(A)
    return default_map(algebra).backward(A)


def convert(x, target):
    """Map an element into ``target`` with the builtin tables (through Cl(3,0) if needed)."""
    source = x.family if isinstance(x, ComplexQuaternion) else x.sig
    if source == target:
        return x
    if source == COQUATERNION and target == CL12:
        return COQUATERNION_CL12.forward(x)
    if source == CL12 and target == COQUATERNION:
        return COQUATERNION_CL12.backward(x)
    return from_cl30(to_cl30(x), target)


def _read(expr: str) -> str:
    return sys.stdin.read().strip() if expr == "-" else expr


def _parse(expr: str, algebra):
    return parse(_read(expr), ALGEBRAS[algebra])


def _representative_V(f: ContinuumFamily) -> np.ndarray:
    # smallest |V|² that keeps |w|² >= 0, plus one for margin
    c = f.b123 / 2
    if c == 0 and f.b0 >= 0:
        return np.zeros(3)
    vv = (-f.b0 + np.hypot(f.b0, 2 * c)) / 2 + 1
    return np.array([0.0, 0.0, np.sqrt(vv)])


def cmd_sqrt(args) -> int:
    algebra = ALGEBRAS[args.algebra]
    B = _parse(args.expr, args.algebra)
    sol = sqrt_mv(to_cl30(B), args.tol)
    roots = [from_cl30(R, algebra) for R in sol.roots]
    branches = []
    for R in roots:
        branches.append({
            "kind": "isolated",
            "coefficients": _coeffs(R).tolist(),
            "expression": format_element(R, args.digits),
            "residual": residual(R, B),
        })
    for f in sol.continua:
        sample = from_cl30(continuum_sample(f, _representative_V(f), 0.0), algebra)
        branches.append({
            "kind": "continuum",
            "constraints": {
                "b0": f.b0,
                "b123": f.b123,
                "equations": ["v^2 - V^2 = b0", "2 v.V = b123"],
                "form": "A = v + V e123 in Cl(3,0)",
            },
            "residual": residual(sample, B),
        })

    if args.json:
        print(json.dumps({
            "algebra": args.algebra,
            "input": format_element(B, args.digits),
            "basis": list(_labels(B)),
            "branches": branches,
        }, indent=2))
    else:
        print(f"B = {format_element(B, args.digits)}")
        if not branches:
            print("no roots")
        if roots:
            print(f"{len(roots)} isolated root{'s' if len(roots) != 1 else ''}:")
            for b in branches:
                if b["kind"] == "isolated":
                    print(f"  {b['expression']}    residual {b['residual']:.3g}")
        for f in sol.continua:
            d = args.digits
            print("continuum of roots A = v + V e123 (Cl(3,0) form) with")
            print(f"  v^2 - V^2 = {format_number(f.b0, d)},  2 v.V = {format_number(f.b123, d)}")
            print(f"  sample one with: cqroots sample --algebra {args.algebra} "
                  f"--b0 {format_number(f.b0, d)} --b123 {format_number(f.b123, d)} --V=x,y,z --phase p")
    return 0 if branches else 1


def cmd_mul(args) -> int:
    a = _parse(args.a, args.algebra)
    b = _parse(args.b, args.algebra)
    p = a * b
    if args.json:
        print(json.dumps({"algebra": args.algebra, "basis": list(_labels(p)),
                          "coefficients": _coeffs(p).tolist(), "expression": format_element(p, args.digits)}))
    else:
        print(format_element(p, args.digits))
    return 0


def cmd_map(args) -> int:
    x = _parse(args.expr, args.source)
    y = convert(x, ALGEBRAS[args.target])
    if args.json:
        print(json.dumps({"from": args.source, "to": args.target, "basis": list(_labels(y)),
                          "coefficients": _coeffs(y).tolist(), "expression": format_element(y, args.digits)}))
    else:
        print(format_element(y, args.digits))
    return 0


def cmd_verify(args) -> int:
    R = _parse(args.root, args.algebra)
    B = _parse(args.target, args.algebra)
    r = residual(R, B)
    ok = r <= args.tol
    if args.json:
        print(json.dumps({"algebra": args.algebra, "residual": r, "tol": args.tol, "ok": ok}))
    else:
        print(f"square = {format_element(R * R, args.digits)}")
        print(f"residual {r:.3g} ({'ok' if ok else 'FAIL'}, tol {args.tol:g})")
    return 0 if ok else 1


def cmd_sample(args) -> int:
    try:
        V = [float(x) for x in args.V.split(",")]
    except ValueError:
        raise UsageError(f"--V expects three comma-separated numbers, got {args.V!r}")
    if len(V) != 3:
        raise UsageError(f"--V expects three comma-separated numbers, got {args.V!r}")
    f = ContinuumFamily(args.b0, args.b123)
    A = continuum_sample(f, V, args.phase)
    if A is None:
        print("infeasible: no continuum member with this V", file=sys.stderr)
        return 1
    x = from_cl30(A, ALGEBRAS[args.algebra])
    r = float(np.max(np.abs((A * A - f.target()).coeffs)))
    if args.json:
        print(json.dumps({"algebra": args.algebra, "basis": list(_labels(x)), "coefficients": _coeffs(x).tolist(),
                          "expression": format_element(x, args.digits), "residual": r}))
    else:
        print(format_element(x, args.digits))
        print(f"residual {r:.3g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cqroots", description="Square roots of complex quaternions and Cl(3,0) multivectors.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, algebra=True):
        if algebra:
            sp.add_argument("--algebra", choices=ALGEBRAS, default="hamilton")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--digits", type=int, default=15, help="significant digits (default 15)")

    sp = sub.add_parser("sqrt", help="all square roots of an element")
    common(sp)
    sp.add_argument("expr", help="expression, or - for stdin")
    sp.add_argument("--tol", type=float, default=1e-10, help="relative residual tolerance for accepting roots")
    sp.set_defaults(func=cmd_sqrt)

    sp = sub.add_parser("mul", help="product of two elements")
    common(sp)
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_mul)

    sp = sub.add_parser("map", help="carry an element across an isomorphism")
    common(sp, algebra=False)
    sp.add_argument("--from", dest="source", choices=ALGEBRAS, required=True)
    sp.add_argument("--to", dest="target", choices=ALGEBRAS, required=True)
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_map)

    sp = sub.add_parser("verify", help="check that root squared equals target")
    common(sp)
    sp.add_argument("root")
    sp.add_argument("target")
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sample", help="one member of a continuum of roots")
    common(sp)
    sp.set_defaults(algebra="cl30")
    sp.add_argument("--b0", type=float, required=True)
    sp.add_argument("--b123", type=float, required=True)
    sp.add_argument("--V", required=True, help="x,y,z")
    sp.add_argument("--phase", type=float, default=0.0)
    sp.set_defaults(func=cmd_sample)
    return p


def _shield(argv: list[str]) -> list[str]:
    # expressions such as "-Ik" would be taken for options; a leading space
    # keeps argparse off them and the tokenizer ignores it
    return [" " + a if a.startswith("-") and a not in ("-", "-h") and not a.startswith("--") else a for a in argv]


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_shield(argv))
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
