"""Command-line frontend.

Subcommands: ``ring-info``, ``divisors``, ``ideals``, ``dual``,
``selfdual-search``, ``verify-paper``.  The ring and quotient are configured
by the shared flags ``--p --m --modulus --theta-exp --beta --n --lambda``;
with everything omitted the default is the length-2 skew cyclic context over
F_3 + u F_3 with the order-2 automorphism (p=3, m=1, theta-exp=0, beta=2,
n=2, lambda=1).  JSON output always carries a top-level ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import classify, duality, verify
from .gf import GF
from .chainring import ChainRing, RingAutomorphism, enumerate_automorphisms
from .parsing import ParseError, parse_poly, parse_ring_element, poly_str
from .quotcode import BoundExceededError, CodeContext

SCHEMA = 1


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    ring = common.add_argument_group("ring and quotient")
    ring.add_argument("--p", type=int, default=3, help="prime characteristic (default 3)")
    ring.add_argument("--m", type=int, default=1, help="residue field extension degree (default 1)")
    ring.add_argument(
        "--modulus",
        default=None,
        help="residue field modulus as comma-separated F_p coefficients, constant first "
        "(default: a built-in irreducible for (p, m))",
    )
    ring.add_argument(
        "--theta-exp",
        type=int,
        default=0,
        dest="theta_exp",
        help="Frobenius exponent s of the twist (default 0)",
    )
    ring.add_argument(
        "--beta",
        default=None,
        help="unit scaling the u-part under the twist; default 2 for the F_3 ring, else 1",
    )
    ring.add_argument("--n", type=int, default=2, help="code length (default 2)")
    ring.add_argument(
        "--lambda",
        dest="lam",
        default="1",
        help='shift constant, e.g. "1", "-1" or "1+2*u" (default 1)',
    )
    common.add_argument(
        "--max-bruteforce",
        type=int,
        default=10**6,
        dest="max_bruteforce",
        help="cap on exhaustive vector scans (default 10^6)",
    )
    common.add_argument(
        "--format",
        choices=["text", "json", "dot"],
        default="text",
        help="output format (dot applies to the ideals listing only)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewcodes",
        description="Skew constacyclic codes over F_{p^m} + u F_{p^m}: "
        "divisors, ideal classification, dual codes, self-duality.",
    )
    common = _common_parser()
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("ring-info", parents=[common], help="describe the ring, twist and quotient")

    p_div = sub.add_parser("divisors", parents=[common], help="monic right divisors of x^n - lambda")
    p_div.add_argument("--max-deg", type=int, default=None, help="degree cap (default n)")
    p_div.add_argument(
        "--residue-only",
        action="store_true",
        help="restrict coefficients to the residue field",
    )

    p_ideals = sub.add_parser("ideals", parents=[common], help="enumerate all left ideals and their lattice")
    p_ideals.add_argument("--render", default=None, metavar="PATH", help="also draw the lattice to an image file")

    p_dual = sub.add_parser("dual", parents=[common], help="dual code of the ideal generated by --gen")
    p_dual.add_argument(
        "--gen",
        action="append",
        required=True,
        help='generator polynomial, repeatable, e.g. --gen "x+1+2*u"',
    )
    kind = p_dual.add_mutually_exclusive_group()
    kind.add_argument("--euclidean", action="store_true", help="Euclidean dual (default)")
    kind.add_argument("--hermitian", action="store_true", help="Hermitian dual (needs ord(Theta) = 2)")
    p_dual.add_argument("--verify", action="store_true", help="cross-check against the brute-force dual")

    p_sd = sub.add_parser("selfdual-search", parents=[common], help="search all ideals for self-dual codes")
    sd_kind = p_sd.add_mutually_exclusive_group()
    sd_kind.add_argument("--euclidean", action="store_true", help="Euclidean only")
    sd_kind.add_argument("--hermitian", action="store_true", help="Hermitian only")

    p_verify = sub.add_parser(
        "verify-paper",
        parents=[common],
        help="run the pinned reference suite (factorizations, lattices, dual table)",
    )
    p_verify.add_argument("--json", action="store_true", help="machine-readable results")
    p_verify.add_argument("--report-dir", default=None, help="write results.csv and lattice figures here")

    return parser


def context_from_args(args: argparse.Namespace) -> CodeContext:
    modulus = None
    if args.modulus:
        try:
            modulus = [int(c) for c in args.modulus.split(",")]
        except ValueError:
            raise ValueError(f"--modulus must be comma-separated integers, got {args.modulus!r}")
    field = GF(args.p, args.m, modulus)
    ring = ChainRing(field)
    beta_text = args.beta
    if beta_text is None:
        beta_text = "2" if (args.p, args.m) == (3, 1) else "1"
    from .parsing import parse_field_element

    beta = parse_field_element(beta_text, field)
    auto = RingAutomorphism(ring, args.theta_exp, field.element(field.coeffs(beta)))
    lam = parse_ring_element(args.lam, ring)
    return CodeContext(ring, auto, args.n, lam, max_bruteforce=args.max_bruteforce)


def _emit_json(payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **payload}, indent=2))


def cmd_ring_info(args: argparse.Namespace) -> int:
    ctx = context_from_args(args)
    ring, auto = ctx.ring, ctx.auto
    autos = enumerate_automorphisms(ring)
    info = {
        "p": ring.field.p,
        "m": ring.field.m,
        "modulus": list(ring.field.modulus),
        "ring": repr(ring),
        "ring_size": ring.size,
        "units": len(ring.unit_indices()),
        "automorphisms": len(autos),
        "theta_exp": auto.s,
        "beta": str(auto.beta),
        "theta_order": auto.order,
        "n": ctx.n,
        "lambda": ring.format_idx(ctx.lam_idx),
        "central_modulus": poly_str(ctx.modulus_poly, ring),
    }
    if args.format == "json":
        _emit_json(info)
    else:
        print(f"ring            {info['ring']} ({info['ring_size']} elements, {info['units']} units)")
        print(f"field modulus   {info['modulus']}")
        print(f"twist           Theta[s={info['theta_exp']}, beta={info['beta']}], order {info['theta_order']}")
        print(f"automorphisms   {info['automorphisms']} total for this ring")
        print(f"quotient        by {info['central_modulus']} (length n={info['n']}, lambda={info['lambda']})")
    return 0


def cmd_divisors(args: argparse.Namespace) -> int:
    ctx = context_from_args(args)
    max_deg = args.max_deg if args.max_deg is not None else ctx.n
    divisors = classify.monic_right_divisors(
        ctx.modulus_poly, max_deg, ctx, residue_only=args.residue_only
    )
    if args.format == "json":
        items = []
        for g in divisors:
            G = ctx.generator_matrix(g)
            H = ctx.parity_check_matrix(g)
            items.append(
                {
                    "generator": poly_str(g, ctx.ring),
                    "degree": len(g) - 1,
                    "cardinality": ctx.ring.size ** (ctx.n - (len(g) - 1)),
                    "generator_matrix": [[ctx.ring.format_idx(c) for c in row] for row in G],
                    "parity_check_matrix": [[ctx.ring.format_idx(c) for c in row] for row in H],
                }
            )
        _emit_json({"count": len(divisors), "divisors": items})
    else:
        print(f"{len(divisors)} monic right divisors of {poly_str(ctx.modulus_poly, ctx.ring)} (degree <= {max_deg})")
        for g in divisors:
            size = ctx.ring.size ** (ctx.n - (len(g) - 1))
            print(f"  deg {len(g) - 1}: {poly_str(g, ctx.ring)}   |C| = {size}")
    return 0


def cmd_ideals(args: argparse.Namespace) -> int:
    ctx = context_from_args(args)
    records = classify.enumerate_ideal_records(ctx)
    ideals = [rec.ideal for rec in records]
    edges = classify.ideal_lattice(ideals, ctx)
    if args.render:
        from .plotting import render_lattice

        render_lattice(ideals, edges, ctx, args.render)
        print(f"lattice figure written to {args.render}", file=sys.stderr)
    if args.format == "dot":
        print(classify.dot_lattice(ideals, edges, ctx))
    elif args.format == "json":
        listing = classify.json_listing(ideals, ctx)
        edge_labels = [[ideals[i].label(ctx), ideals[j].label(ctx)] for i, j in edges]
        _emit_json({"count": len(ideals), "ideals": listing, "lattice_edges": edge_labels})
    else:
        print(f"{len(ideals)} left ideals")
        for rec in records:
            ideal = rec.ideal
            print(f"  <{ideal.label(ctx)}>_{ideal.kind.subscript}   |C| = {len(rec.span)}")
        print("cover edges:")
        for i, j in edges:
            print(f"  <{ideals[i].label(ctx)}> > <{ideals[j].label(ctx)}>")
    return 0


def cmd_dual(args: argparse.Namespace) -> int:
    ctx = context_from_args(args)
    kind = duality.InnerProduct.HERMITIAN if args.hermitian else duality.InnerProduct.EUCLIDEAN
    gens = [parse_poly(text, ctx.skew) for text in args.gen]
    span = ctx.span_from_generators(gens)
    ideal = classify.canonicalize(span, ctx)
    dual = duality.dual_ideal(ideal, kind, ctx)
    payload = {
        "kind": kind.value,
        "code": {
            "label": ideal.label(ctx),
            "type": ideal.kind.name,
            "generators": [poly_str(g, ctx.ring) for g in ideal.generators(ctx)],
            "cardinality": len(span),
        },
        "dual": {
            "label": dual.label(ctx),
            "type": dual.kind.name,
            "generators": [poly_str(g, ctx.ring) for g in dual.generators(ctx)],
            "cardinality": dual.cardinality(ctx),
        },
    }
    if args.verify:
        oracle = duality.brute_dual(span, kind, ctx)
        payload["oracle_agrees"] = dual.span(ctx) == oracle
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"code  <{ideal.label(ctx)}>_{ideal.kind.subscript}  |C| = {len(span)}")
        print(f"{kind.value} dual  <{dual.label(ctx)}>_{dual.kind.subscript}  |C| = {payload['dual']['cardinality']}")
        for g in payload["dual"]["generators"]:
            print(f"  generator: {g}")
        if args.verify:
            print(f"oracle agreement: {payload['oracle_agrees']}")
    if args.verify and not payload["oracle_agrees"]:
        return 1
    return 0


def cmd_selfdual_search(args: argparse.Namespace) -> int:
    ctx = context_from_args(args)
    kinds = []
    if args.euclidean or not args.hermitian:
        kinds.append(duality.InnerProduct.EUCLIDEAN)
    if args.hermitian or (not args.euclidean and ctx.auto.order == 2):
        kinds.append(duality.InnerProduct.HERMITIAN)
    records = classify.enumerate_ideal_records(ctx)
    found = []
    for kind in kinds:
        for rec in records:
            if duality.is_self_dual_ideal(rec.ideal, kind, ctx):
                found.append((kind.value, rec.ideal))
    if args.format == "json":
        _emit_json(
            {
                "searched": len(records),
                "kinds": [k.value for k in kinds],
                "self_dual": [
                    {"kind": kind, "label": ideal.label(ctx), "type": ideal.kind.name}
                    for kind, ideal in found
                ],
            }
        )
    else:
        print(f"searched {len(records)} ideals ({', '.join(k.value for k in kinds)})")
        if not found:
            print("no self-dual codes")
        for kind, ideal in found:
            print(f"  {kind}: <{ideal.label(ctx)}>_{ideal.kind.subscript}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_checks()
    if args.report_dir:
        written = verify.write_report(results, args.report_dir)
        for path in written:
            print(f"wrote {path}", file=sys.stderr)
    if args.json or args.format == "json":
        _emit_json(
            {
                "results": [
                    {"name": r.name, "pass": r.passed, "detail": r.detail} for r in results
                ],
                "all_pass": all(r.passed for r in results),
            }
        )
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            suffix = f"  ({r.detail})" if r.detail else ""
            print(f"{status} {r.name}{suffix}")
    return 0 if all(r.passed for r in results) else 1


_COMMANDS = {
    "ring-info": cmd_ring_info,
    "divisors": cmd_divisors,
    "ideals": cmd_ideals,
    "dual": cmd_dual,
    "selfdual-search": cmd_selfdual_search,
    "verify-paper": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, BoundExceededError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
