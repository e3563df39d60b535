"""Command-line front end.

Verbs: orbit, product, cpoly, spoly, char, invchar, recursion, verify,
table, dims.  Exit status: 0 success, 1 domain error (bad weight etc.),
2 verification failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache as cache_mod
from . import verify as verify_mod
from .genpoly import (PolyTable, c_polynomial, char_variable_polynomial,
                      character_polynomial, inverse_character, s_polynomial)
from .multiplicities import closed_form_dimension, dim_irrep, multiplicity_report
from .orbitalg import cc_product, cs_product, derive_recursion, ss_product
from .orbits import weyl_orbit
from .polyring import MonomialOrder
from .rootsys import RankError, build_root_system

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(USAGE_EXIT)


def _weight(text):
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}; expected like 1,0,2")


def build_parser() -> _Parser:
    p = _Parser(prog="orbitpoly", description=__doc__)
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, weights=1):
        sp.add_argument("--algebra", required=True, help="algebra spec like A2, B3, G2")
        if weights == 1:
            sp.add_argument("--weight", type=_weight, required=True)
        elif weights == 2:
            sp.add_argument("--weight", type=_weight, action="append", required=True,
                            help="give twice: left and right factor")
        sp.add_argument("--format", choices=("text", "json", "latex"), default="text")

    common(sub.add_parser("orbit", help="enumerate a Weyl orbit"))
    sp = sub.add_parser("product", help="decompose a product of orbit functions")
    common(sp, weights=2)
    sp.add_argument("--kind", choices=("cc", "cs", "ss"), default="cc")

    for verb, hlp in (("cpoly", "C-polynomial"), ("spoly", "S-polynomial"),
                      ("char", "character polynomial"), ("invchar", "orbit sum as characters")):
        sp = sub.add_parser(verb, help=hlp)
        common(sp)
        if verb in ("cpoly", "char"):
            sp.add_argument("--cache", help="polynomial table cache path")
            sp.add_argument("--char-variables", action="store_true",
                            help="use fundamental characters as variables")

    sp = sub.add_parser("recursion", help="derive one X_j recurrence")
    common(sp)
    sp.add_argument("--var", type=int, required=True)
    sp.add_argument("--kind", choices=("C", "S"), default="C")

    sp = sub.add_parser("table", help="generate a table of polynomials")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--kind", choices=("C", "S", "char", "mult"), default="C")
    sp.add_argument("--max-weight", type=int, default=3,
                    help="bound on the coordinate sum of the highest weights")
    sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sp.add_argument("--cache", help="polynomial table cache path")

    sp = sub.add_parser("dims", help="dimensions of irreducible representations")
    common(sp)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--suite", default="all",
                    choices=tuple(verify_mod.SUITES) + ("all",))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--tolerance", type=float, default=None)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _emit_poly(poly, order, fmt, names=None):
    if fmt == "json":
        return poly.to_json(order)
    if fmt == "latex":
        return poly.to_latex(order, names=names)
    return poly.to_text(order, names=names)


def _dominant_weights(rank, bound):
    import itertools

    out = [w for w in itertools.product(range(bound + 1), repeat=rank)
           if sum(w) <= bound]
    return sorted(out, key=lambda w: (sum(w), w))


def _with_cache(args, rs, kind):
    """Load the memo table from --cache if given; warn and rebuild if stale."""
    mode = "char" if getattr(args, "char_variables", False) else "orbit"
    table = PolyTable(rs=rs, kind=kind, variable_mode=mode)
    path = getattr(args, "cache", None)
    if path:
        import os
        if os.path.exists(path):
            try:
                table = cache_mod.load_table(path, rs, kind, mode)
            except cache_mod.CacheMiss as exc:
                print(f"warning: {exc}; recomputing", file=sys.stderr)
    return table, path


def run(args) -> tuple[int, str]:
    rs = build_root_system(args.algebra)
    order = MonomialOrder(rs)
    fmt = getattr(args, "format", "text")

    if args.verb == "orbit":
        orb = weyl_orbit(rs, args.weight)
        if fmt == "json":
            return 0, orb.to_json()
        rows = [f"{w} parity {p}" for w, p in orb.points]
        return 0, f"orbit of {args.weight} size {len(orb)}\n" + "\n".join(rows)

    if args.verb == "product":
        if len(args.weight) != 2:
            raise ValueError("product needs exactly two --weight arguments")
        a, b = args.weight
        combo = {"cc": lambda: cc_product(rs, a, b),
                 "cs": lambda: cs_product(rs, a, b),
                 "ss": lambda: ss_product(rs, a, b)}[args.kind]()
        if fmt == "json":
            return 0, json.dumps({"kind": combo.kind,
                                  "terms": [{"weight": list(w), "coeff": c}
                                            for w, c in combo.terms]}, sort_keys=True)
        body = " + ".join(f"{c}*{combo.kind}{w}" for w, c in combo.terms)
        return 0, body

    if args.verb in ("cpoly", "char"):
        table, path = _with_cache(args, rs, "C" if args.verb == "cpoly" else "char")
        if args.verb == "cpoly":
            if table.variable_mode == "char":
                poly = table.get(args.weight)
            else:
                poly = c_polynomial(rs, args.weight, table)
        else:
            poly = character_polynomial(rs, args.weight,
                                        table if table.variable_mode == "orbit" else None)
            table.entries.setdefault(tuple(args.weight), poly)
        if path:
            cache_mod.store_table(path, table)
        return 0, _emit_poly(poly, order, fmt)

    if args.verb == "spoly":
        return 0, _emit_poly(s_polynomial(rs, args.weight), order, fmt)

    if args.verb == "invchar":
        terms = inverse_character(rs, args.weight)
        ordered = sorted(terms.items(), key=lambda t: order.key(t[0]), reverse=True)
        if fmt == "json":
            return 0, json.dumps([{"weight": list(w), "coeff": c} for w, c in ordered],
                                 sort_keys=True)
        return 0, " + ".join(f"{c}*chi{w}" for w, c in ordered)

    if args.verb == "recursion":
        rel = derive_recursion(rs, args.var, args.weight, args.kind)
        if fmt == "json":
            return 0, rel.render_json()
        if fmt == "latex":
            return 0, rel.render_latex()
        return 0, rel.render_text()

    if args.verb == "dims":
        d = dim_irrep(rs, args.weight)
        closed = closed_form_dimension(rs, args.weight)
        if fmt == "json":
            return 0, json.dumps({"weight": list(args.weight), "dim": d,
                                  "closed_form": closed}, sort_keys=True)
        extra = "" if closed is None else f" (closed form {closed})"
        return 0, f"dim {tuple(args.weight)} = {d}{extra}"

    if args.verb == "table":
        weights = _dominant_weights(rs.rank, args.max_weight)
        if args.kind == "mult":
            report = multiplicity_report(rs, weights)
            return 0, json.dumps(report, sort_keys=True) if fmt == "json" else \
                _render_mult_table(report)
        table, path = _with_cache(args, rs, args.kind)
        if args.kind == "S":
            weights = [tuple(c + 1 for c in w) for w in weights]
        rows = []
        for w in weights:
            poly = table.get(w)
            label = f"{args.kind}{w}"
            if fmt == "json":
                rows.append({"weight": list(w), "poly": json.loads(poly.to_json(order))})
            elif fmt == "latex":
                rows.append(f"{label} & {poly.to_latex(order)} \\\\")
            else:
                rows.append(f"{label} = {poly.to_text(order)}")
        if path:
            cache_mod.store_table(path, table)
        if fmt == "json":
            return 0, json.dumps({"algebra": str(rs.algebra), "kind": args.kind,
                                  "rows": rows}, sort_keys=True)
        return 0, "\n".join(rows)

    if args.verb == "verify":
        report = verify_mod.run_suite(args.suite, args.algebra, seed=args.seed,
                                      n_samples=args.samples, tolerance=args.tolerance)
        ok = report["pass"]
        if fmt == "json":
            return (0 if ok else 2), json.dumps(report, sort_keys=True)
        lines = [_suite_line(r) for r in report.get("reports", [report])]
        lines.append(f"overall: {'PASS' if ok else 'FAIL'}")
        return (0 if ok else 2), "\n".join(lines)

    raise ValueError(f"unhandled verb {args.verb}")


def _suite_line(report) -> str:
    n = report.get("count", len(report.get("entries", [])))
    return f"{report['suite']:16s} {report['algebra']:3s} {n:4d} checks: " \
           f"{'PASS' if report['pass'] else 'FAIL'}"


def _render_mult_table(report) -> str:
    ws = [tuple(w) for w in report["weights"]]
    head = "m[mu][lam]  " + "  ".join(str(w) for w in ws)
    lines = [head]
    for i, w in enumerate(ws):
        lines.append(f"{str(w):10s}  " + "  ".join(str(x) for x in report["multiplicities"][i]))
    lines.append("dims: " + " ".join(str(d) for d in report["dimensions"]))
    lines.append("orbit sizes: " + " ".join(str(s) for s in report["orbit_sizes"]))
    lines.append("inverse:")
    for i, w in enumerate(ws):
        lines.append(f"{str(w):10s}  " + "  ".join(str(x) for x in report["inverse"][i]))
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, output = run(args)
    except (ValueError, IndexError, RankError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
