"""Command-line interface.

Exit codes for ``check``: 0 Injective, 2 Inconclusive, 3 NotApplicable,
1 usage or parse error.  The environment variable MONODROMA_SEED fixes the
seed of every randomized subroutine (determinant sampling, oracle starts).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .parser import ParseError, parse_bindings, parse_map, parse_poly
from .polycore import quasi_type
from .field import PlanarField, hamiltonian_field, support
from .bendixson import compactify
from .diagram import build_diagram
from .monodromy import check_monodromic
from .pipeline import INCONCLUSIVE, INJECTIVE, NOT_APPLICABLE, certify
from .realroots import quasi_factor_test
from .render import render_ascii, render_svg

_VERDICT_EXIT = {INJECTIVE: 0, INCONCLUSIVE: 2, NOT_APPLICABLE: 3}


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that exits 1 on usage errors, matching the parse-error code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _seed() -> Optional[int]:
    raw = os.environ.get("MONODROMA_SEED")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"MONODROMA_SEED must be an integer, got {raw!r}")


def _print_certificate(cert) -> None:
    print(f"verdict: {cert.verdict}")
    if cert.reason:
        print(f"reason: {cert.reason}")
    det = cert.det_status
    line = f"jacobian determinant: {det.status}"
    if det.method:
        line += f" ({det.method})"
    if det.witness is not None:
        tag = "exact" if det.witness_exact else "approximate"
        line += f" at {tag} witness ({det.witness[0]}, {det.witness[1]})"
    print(line)
    if cert.cima is not None:
        print(f"coprime leading forms: {'yes' if cert.cima else 'no'}")
    if cert.diagram is not None:
        points = ", ".join(str(v.point) for v in cert.diagram.vertices)
        print(f"diagram vertices: {points}")
        for pt, beta in cert.diagram.inner_betas:
            print(f"beta{pt} = {beta}")
    if cert.monodromy is not None:
        print(f"monodromy: {cert.monodromy.outcome}")
        for report in cert.monodromy.conditions:
            mark = "pass" if report.passed else "FAIL"
            print(f"  ({report.condition}) {mark}: {report.detail}")
    if cert.oracle_winding:
        for entry in cert.oracle_winding:
            print(f"oracle winding from r={entry['start_radius']}: "
                  f"{entry['angle']:+.6f} ({entry['status']})")
    total = cert.timings_ms.get("total")
    if total is not None:
        print(f"total time: {total:.1f} ms")


def _cmd_check(args: argparse.Namespace) -> int:
    f, g = parse_map(args.map)
    cert = certify(f, g, assume_det=args.assume_det, seed=_seed(),
                   with_oracle=args.with_oracle)
    if args.json:
        print(json.dumps(cert.to_json_dict(), indent=2))
    else:
        _print_certificate(cert)
    return _VERDICT_EXIT[cert.verdict]


def _cmd_diagram(args: argparse.Namespace) -> int:
    f, g = parse_map(args.map)
    x_field = hamiltonian_field(f, g)
    if x_field.is_zero:
        print("the Hamiltonian field of this map is identically zero", file=sys.stderr)
        return 3
    b_field = compactify(x_field)
    dia = build_diagram(b_field)
    points = [sp.point for sp in support(b_field)]
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as handle:
            handle.write(render_svg(dia, points))
        print(f"wrote {args.svg}")
    else:
        print(render_ascii(dia, points))
    return 0


def _cmd_monodromy(args: argparse.Namespace) -> int:
    p, q = parse_bindings(args.field, ("P", "Q"), ("u", "v"))
    x_field = PlanarField(p, q)
    if x_field.is_zero:
        print("zero field", file=sys.stderr)
        return 1
    dia = build_diagram(x_field)
    verdict = check_monodromic(dia)
    print(render_ascii(dia, [sp.point for sp in support(x_field)]))
    print()
    print(f"monodromy: {verdict.outcome}")
    if verdict.reason:
        print(f"reason: {verdict.reason}")
    for report in verdict.conditions:
        mark = "pass" if report.passed else "FAIL"
        print(f"  ({report.condition}) {mark}: {report.detail}")
    return 0


def _cmd_bendixson(args: argparse.Namespace) -> int:
    p, q = parse_bindings(args.field, ("P", "Q"), ("x", "y"))
    b_field = compactify(PlanarField(p, q))
    print(f"P = {b_field.p.to_string(('u', 'v'))}")
    print(f"Q = {b_field.q.to_string(('u', 'v'))}")
    return 0


def _cmd_factor_test(args: argparse.Namespace) -> int:
    try:
        t1_text, t2_text = args.type.split(",")
        t = quasi_type(int(t1_text), int(t2_text))
    except ValueError as exc:
        print(f"invalid --type: {exc}", file=sys.stderr)
        return 1
    h = parse_poly(args.poly, ("u", "v"))
    result = quasi_factor_test(h, t)
    if result.has_factor:
        print(f"h has a factor v^{t[0]} - a*u^{t[1]} for:")
        for w in result.witnesses:
            if w.exact is not None:
                print(f"  a = {w.exact}")
            else:
                print(f"  a in ({w.lo}, {w.hi})")
    else:
        print(f"h has no factor v^{t[0]} - a*u^{t[1]} with real nonzero a")
    return 0


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="monodroma",
        description="Exact injectivity certification for planar polynomial maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[], help="certify a map f = ...; g = ...")
    check.add_argument("map", help="map text, e.g. 'f = x + x^3; g = y + x^2'")
    check.add_argument("--assume-det", action="store_true",
                       help="take the nonvanishing determinant hypothesis on trust")
    check.add_argument("--json", action="store_true", help="emit the JSON certificate")
    check.add_argument("--with-oracle", action="store_true",
                       help="cross-check with the numeric winding oracle")
    check.set_defaults(func=_cmd_check)

    diagram = sub.add_parser("diagram", help="Newton diagram of b(X) for a map")
    diagram.add_argument("map")
    group = diagram.add_mutually_exclusive_group()
    group.add_argument("--ascii", action="store_true", help="text rendering (default)")
    group.add_argument("--svg", metavar="FILE", help="write an SVG rendering")
    diagram.set_defaults(func=_cmd_diagram)

    monodromy = sub.add_parser("monodromy", help="monodromy test for a field P = ...; Q = ... in (u, v)")
    monodromy.add_argument("field")
    monodromy.set_defaults(func=_cmd_monodromy)

    bendixson = sub.add_parser("bendixson", help="compactify a field P = ...; Q = ... in (x, y)")
    bendixson.add_argument("field")
    bendixson.set_defaults(func=_cmd_bendixson)

    factor = sub.add_parser("factor-test", help="edge factor test for a polynomial in (u, v)")
    factor.add_argument("poly")
    factor.add_argument("--type", required=True, metavar="T1,T2",
                        help="quasi-homogeneity type, e.g. 3,1")
    factor.set_defaults(func=_cmd_factor_test)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
