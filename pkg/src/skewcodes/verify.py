"""Pinned reference checks for the length-2 skew cyclic family over F_3+uF_3.

The ring (F_3 + u F_3)[x; Theta] with Theta(a + b u) = a + 2 b u is the
richest small worked example of this library: x^6 - 1 factors both as
(x+1)^3 (x+2)^3 and as (x^2 + u x + 2)^3, the quotient by <x^2 - 1> has
exactly 13 left ideals (9 already for the identity automorphism), and every
Euclidean and Hermitian dual is known in closed form.  This module freezes
those facts as a named check suite; the CLI exposes it as ``verify-paper``
and optionally writes a CSV report with rendered lattice figures.
"""

from __future__ import annotations

import csv
import os
import traceback
from dataclasses import dataclass
from typing import Callable

from . import classify, duality
from .parsing import parse_poly
from .quotcode import CodeContext


def skew_context() -> CodeContext:
    return CodeContext.create(p=3, m=1, theta_exp=0, beta=2, n=2, lam=1)


def commutative_context() -> CodeContext:
    return CodeContext.create(p=3, m=1, theta_exp=0, beta=1, n=2, lam=1)


COMMUTATIVE_NODES = {
    ("1", 1),
    ("u,x+1", 3),
    ("u,x+2", 3),
    ("u", 2),
    ("x+1", 1),
    ("x+2", 1),
    ("u(x+1)", 2),
    ("u(x+2)", 2),
    ("0", 1),
}

COMMUTATIVE_EDGES = {
    ("1", "u,x+1"),
    ("1", "u,x+2"),
    ("u,x+1", "x+1"),
    ("u,x+1", "u"),
    ("u,x+2", "x+2"),
    ("u,x+2", "u"),
    ("x+1", "u(x+1)"),
    ("u", "u(x+1)"),
    ("x+2", "u(x+2)"),
    ("u", "u(x+2)"),
    ("u(x+1)", "0"),
    ("u(x+2)", "0"),
}

SKEW_EXTRA_NODES = {
    ("x+1+u", 1),
    ("x+1+2u", 1),
    ("x+2+u", 1),
    ("x+2+2u", 1),
}

SKEW_EDGES = COMMUTATIVE_EDGES | {
    ("u,x+1", "x+1+u"),
    ("u,x+1", "x+1+2u"),
    ("u,x+2", "x+2+u"),
    ("u,x+2", "x+2+2u"),
    ("x+1+u", "u(x+1)"),
    ("x+1+2u", "u(x+1)"),
    ("x+2+u", "u(x+2)"),
    ("x+2+2u", "u(x+2)"),
}

# label -> (Euclidean dual label, Hermitian dual label), all 13 ideals
DUAL_TABLE = {
    "0": ("1", "1"),
    "u(x+1)": ("u,x+2", "u,x+2"),
    "u(x+2)": ("u,x+1", "u,x+1"),
    "u": ("u", "u"),
    "x+1+2u": ("x+2+2u", "x+2+u"),
    "x+1+u": ("x+2+u", "x+2+2u"),
    "x+1": ("x+2", "x+2"),
    "x+2": ("x+1", "x+1"),
    "x+2+u": ("x+1+u", "x+1+2u"),
    "x+2+2u": ("x+1+2u", "x+1+u"),
    "u,x+1": ("u(x+2)", "u(x+2)"),
    "u,x+2": ("u(x+1)", "u(x+1)"),
    "1": ("0", "0"),
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check_factorization_linear_cubes() -> str:
    ctx = CodeContext.create(p=3, m=1, theta_exp=0, beta=2, n=6, lam=1)
    sk = ctx.skew
    product = sk.mul(sk.pow(parse_poly("x+1", sk), 3), sk.pow(parse_poly("x+2", sk), 3))
    if product != ctx.modulus_poly:
        return f"(x+1)^3 (x+2)^3 evaluated to a different polynomial"
    return ""


def _check_factorization_quadratic_cube() -> str:
    ctx = CodeContext.create(p=3, m=1, theta_exp=0, beta=2, n=6, lam=1)
    sk = ctx.skew
    product = sk.pow(parse_poly("x^2 + u*x + 2", sk), 3)
    if product != ctx.modulus_poly:
        return f"(x^2+ux+2)^3 evaluated to a different polynomial"
    return ""


def _node_set(ctx: CodeContext) -> set[tuple[str, int]]:
    return {ideal.type_label(ctx) for ideal in classify.enumerate_ideals(ctx)}


def _edge_set(ctx: CodeContext) -> set[tuple[str, str]]:
    ideals = classify.enumerate_ideals(ctx)
    edges = classify.ideal_lattice(ideals, ctx)
    return {(ideals[i].label(ctx), ideals[j].label(ctx)) for i, j in edges}


def _check_commutative_nodes() -> str:
    nodes = _node_set(commutative_context())
    if nodes != COMMUTATIVE_NODES:
        return f"expected {sorted(COMMUTATIVE_NODES)}, got {sorted(nodes)}"
    return ""


def _check_commutative_edges() -> str:
    edges = _edge_set(commutative_context())
    if edges != COMMUTATIVE_EDGES:
        return f"edge sets differ: missing {COMMUTATIVE_EDGES - edges}, extra {edges - COMMUTATIVE_EDGES}"
    return ""


def _check_skew_nodes() -> str:
    nodes = _node_set(skew_context())
    expected = COMMUTATIVE_NODES | SKEW_EXTRA_NODES
    if nodes != expected:
        return f"expected {sorted(expected)}, got {sorted(nodes)}"
    return ""


def _check_skew_edges() -> str:
    edges = _edge_set(skew_context())
    if edges != SKEW_EDGES:
        return f"edge sets differ: missing {SKEW_EDGES - edges}, extra {edges - SKEW_EDGES}"
    return ""


def _check_lattice_embedding() -> str:
    """Cover edges among the 9 commutative-case ideals, recomputed inside the
    13-ideal lattice, must reproduce the commutative lattice."""
    ctx = skew_context()
    ideals = classify.enumerate_ideals(ctx)
    common_labels = {label for label, _ in COMMUTATIVE_NODES}
    subset = [ideal for ideal in ideals if ideal.label(ctx) in common_labels]
    if len(subset) != len(COMMUTATIVE_NODES):
        return f"only {len(subset)} of the commutative ideals reappear"
    edges = classify.ideal_lattice(subset, ctx)
    edge_labels = {(subset[i].label(ctx), subset[j].label(ctx)) for i, j in edges}
    if edge_labels != COMMUTATIVE_EDGES:
        return f"induced sub-poset differs: missing {COMMUTATIVE_EDGES - edge_labels}, extra {edge_labels - COMMUTATIVE_EDGES}"
    return ""


def _check_dual_table(kind: duality.InnerProduct) -> str:
    ctx = skew_context()
    ideals = classify.enumerate_ideals(ctx)
    if len(ideals) != len(DUAL_TABLE):
        return f"expected {len(DUAL_TABLE)} ideals, got {len(ideals)}"
    col = 0 if kind is duality.InnerProduct.EUCLIDEAN else 1
    wrong = []
    for ideal in ideals:
        label = ideal.label(ctx)
        got = duality.dual_ideal(ideal, kind, ctx).label(ctx)
        want = DUAL_TABLE[label][col]
        if got != want:
            wrong.append(f"<{label}> -> <{got}> (expected <{want}>)")
    return "; ".join(wrong)


def _check_self_dual_maximal_ideal() -> str:
    ctx = skew_context()
    ideal = classify.canonicalize(ctx.span_from_generators([ctx.skew.constant(ctx.ring.u_idx)]), ctx)
    problems = []
    for kind in duality.InnerProduct:
        if not duality.is_self_dual_ideal(ideal, kind, ctx):
            problems.append(f"<u> is not {kind.value} self-dual by the closed form")
        span = ideal.span(ctx)
        if duality.brute_dual(span, kind, ctx) != span:
            problems.append(f"<u> is not {kind.value} self-dual by brute force")
    return "; ".join(problems)


def _check_no_euclidean_self_dual_linear() -> str:
    """No monic degree-1 right divisor of x^2-1 over F_3+uF_3 generates a
    Euclidean self-dual code, for either automorphism of the ring."""
    found = []
    for beta in (1, 2):
        ctx = CodeContext.create(p=3, m=1, theta_exp=0, beta=beta, n=2, lam=1)
        for g in classify.monic_right_divisors(ctx.modulus_poly, 1, ctx):
            if len(g) - 1 != 1:
                continue
            if duality.is_self_dual_li1(g, duality.InnerProduct.EUCLIDEAN, ctx):
                found.append(f"beta={beta}: {g}")
    if found:
        return f"unexpected Euclidean self-dual generators: {found}"
    return ""


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("factorization-linear-cubes", _check_factorization_linear_cubes),
    ("factorization-quadratic-cube", _check_factorization_quadratic_cube),
    ("lattice-commutative-nodes", _check_commutative_nodes),
    ("lattice-commutative-edges", _check_commutative_edges),
    ("lattice-skew-nodes", _check_skew_nodes),
    ("lattice-skew-edges", _check_skew_edges),
    ("lattice-embedding", _check_lattice_embedding),
    ("dual-table-euclidean", lambda: _check_dual_table(duality.InnerProduct.EUCLIDEAN)),
    ("dual-table-hermitian", lambda: _check_dual_table(duality.InnerProduct.HERMITIAN)),
    ("self-dual-maximal-ideal", _check_self_dual_maximal_ideal),
    ("no-euclidean-self-dual-linear", _check_no_euclidean_self_dual_linear),
]


def run_checks() -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        try:
            detail = fn()
            results.append(CheckResult(name, not detail, detail))
        except Exception:
            results.append(CheckResult(name, False, traceback.format_exc(limit=2).strip()))
    return results


def write_report(results: list[CheckResult], report_dir: str) -> list[str]:
    """Write results.csv plus rendered lattice figures; returns written paths."""
    from .plotting import render_lattice

    os.makedirs(report_dir, exist_ok=True)
    written = []
    csv_path = os.path.join(report_dir, "results.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "status", "detail"])
        for r in results:
            writer.writerow([r.name, "pass" if r.passed else "fail", r.detail])
    written.append(csv_path)
    for fname, ctx, title in (
        ("lattice_commutative.png", commutative_context(), "Left ideals, identity twist"),
        ("lattice_skew.png", skew_context(), "Left ideals, order-2 twist"),
    ):
        ideals = classify.enumerate_ideals(ctx)
        edges = classify.ideal_lattice(ideals, ctx)
        out = os.path.join(report_dir, fname)
        render_lattice(ideals, edges, ctx, out, title=title)
        written.append(out)
    return written
