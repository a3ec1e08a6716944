"""Canonical forms and exhaustive enumeration of the left ideals of
R[x; Theta] / <x^n - lambda> over R = F_q + u*F_q.

Every left ideal C falls into exactly one of three types, read off from the
set A of nonzero members of minimal degree:

* LI-1: A contains a monic polynomial g (then unique); C = <g> and g is a
  monic right divisor of x^n - lambda.  The zero ideal is the degenerate
  member of this type with g = x^n - lambda itself.
* LI-2: C contains no monic polynomial at all; the unique member of A with
  leading coefficient u is u*g1 with g1 a monic residue right divisor of
  x^n - bar(lambda), and C = <u*g1>.
* LI-3: A has no monic member but C does; C = <u*g1, f0 + u*f1> where
  additionally g1 right-divides f0, f0 right-divides x^n - bar(lambda),
  deg f1 < deg g1 < deg f0 < n, and (for lambda in the residue field) g1
  right-divides shift_through_u((x^n - lambda)/f0) * f1.

:func:`canonicalize` extracts this data from a materialized span, and
:func:`enumerate_ideals` produces every left ideal exactly once by generating
all candidate tuples satisfying the per-type conditions, spanning them, and
deduplicating by span.  The conditions are used as a candidate filter only;
the resulting type is always re-read from the span.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .quotcode import BoundExceededError, CodeContext, CodeSpan
from .skewpoly import Poly


class IdealType(enum.Enum):
    LI1 = 1
    LI2 = 2
    LI3 = 3

    @property
    def subscript(self) -> int:
        return self.value


@dataclass(frozen=True)
class CanonicalIdeal:
    """Canonical generator data of a left ideal; equality is field-by-field."""

    kind: IdealType
    g: Poly | None = None  # LI-1 only: monic right divisor of x^n - lambda
    g1: Poly | None = None  # LI-2 / LI-3: residue polynomial under the u
    f0: Poly | None = None  # LI-3 only
    f1: Poly | None = None  # LI-3 only

    def generators(self, ctx: CodeContext) -> list[Poly]:
        sk = ctx.skew
        if self.kind is IdealType.LI1:
            assert self.g is not None
            return [self.g]
        if self.kind is IdealType.LI2:
            assert self.g1 is not None
            return [sk.u_times(self.g1)]
        assert self.g1 is not None and self.f0 is not None and self.f1 is not None
        return [sk.u_times(self.g1), sk.add(self.f0, sk.u_times(self.f1))]

    def span(self, ctx: CodeContext) -> CodeSpan:
        return ctx.span_from_generators(self.generators(ctx))

    def cardinality(self, ctx: CodeContext) -> int:
        """|C| from the canonical data (cross-checked against spans in tests)."""
        n, q, size = ctx.n, ctx.ring.q, ctx.ring.size
        if self.kind is IdealType.LI1:
            return size ** (n - (len(self.g) - 1))
        if self.kind is IdealType.LI2:
            return q ** (n - (len(self.g1) - 1))
        return q ** (2 * n - (len(self.f0) - 1) - (len(self.g1) - 1))

    def is_zero(self, ctx: CodeContext) -> bool:
        return self.kind is IdealType.LI1 and len(self.g) - 1 == ctx.n

    def label(self, ctx: CodeContext) -> str:
        """Compact generator label in the style used for lattice figures."""
        from .parsing import compact_poly_str

        if self.kind is IdealType.LI1:
            if self.is_zero(ctx):
                return "0"
            return compact_poly_str(self.g, ctx.ring)
        u_part = "u" if self.g1 == ctx.skew.one else f"u({compact_poly_str(self.g1, ctx.ring)})"
        if self.kind is IdealType.LI2:
            return u_part
        f = ctx.skew.add(self.f0, ctx.skew.u_times(self.f1))
        return f"{u_part},{compact_poly_str(f, ctx.ring)}"

    def type_label(self, ctx: CodeContext) -> tuple[str, int]:
        return (self.label(ctx), self.kind.subscript)


def ideal_sort_key(ideal: CanonicalIdeal, ctx: CodeContext):
    sk = ctx.skew
    if ideal.kind is IdealType.LI1:
        return (1, sk.sort_key(ideal.g))
    if ideal.kind is IdealType.LI2:
        return (2, sk.sort_key(ideal.g1))
    return (3, sk.sort_key(ideal.f0), sk.sort_key(ideal.g1), sk.sort_key(ideal.f1))


def monic_right_divisors(
    target: Poly,
    max_deg: int,
    ctx: CodeContext,
    residue_only: bool = False,
) -> list[Poly]:
    """All monic right divisors of ``target`` with degree <= max_deg.

    Exhaustive trial division over all monic polynomials with coefficients in
    R (or in the residue subfield when ``residue_only``), ordered by degree
    then coefficientwise.
    """
    sk = ctx.skew
    target = sk.poly(target)
    if not target or not ctx.ring.is_unit(target[-1]):
        raise ValueError("target must have a unit leading coefficient")
    base = ctx.ring.q if residue_only else ctx.ring.size
    total = sum(base**d for d in range(max_deg + 1))
    if total > ctx.max_bruteforce:
        raise BoundExceededError(
            f"divisor search over {total} candidates exceeds the bound {ctx.max_bruteforce}"
        )
    one = ctx.ring.one_idx
    found: list[Poly] = []
    for d in range(max_deg + 1):
        for low in itertools.product(range(base), repeat=d):
            cand = sk.poly(low + (one,))
            if sk.is_right_divisor(cand, target):
                found.append(cand)
    found.sort(key=sk.sort_key)
    found.sort(key=len)
    return found


def canonicalize(span: CodeSpan, ctx: CodeContext, validate: bool = True) -> CanonicalIdeal:
    """Read the canonical generator data off a materialized left ideal.

    Span-equal ideals always receive identical data: the monic member of
    minimal degree is unique (LI-1), as is the minimal member with leading
    coefficient exactly u (LI-2/LI-3) and, after reducing its u-part right
    modulo g1, the monic member f0 + u*f1 of minimal degree (LI-3).
    """
    if validate and not span.is_left_ideal_fast(ctx):
        raise ValueError("the given span is not closed as a left ideal")
    if len(span.words) == 1:
        return CanonicalIdeal(IdealType.LI1, g=ctx.modulus_poly)
    sk = ctx.skew
    ring = ctx.ring
    polys = [ctx.poly_from_word(w) for w in span.words if w != ctx.zero_word]
    min_len = min(len(f) for f in polys)
    minimal = [f for f in polys if len(f) == min_len]
    unit_led_minimal = [f for f in minimal if ring.is_unit(f[-1])]
    if unit_led_minimal:
        return CanonicalIdeal(IdealType.LI1, g=sk.monic_scale(unit_led_minimal[0]))
    # All minimal members have leading coefficient in u*F_q; normalize to u.
    w = minimal[0]
    _, b = ring.parts(w[-1])
    w = sk.const_mul(ring.embed(ctx.field.inv(b)), w)
    if any(ring.bar(c) for c in w):
        raise ValueError("minimal member is not a multiple of u; span is not a left ideal")
    g1 = tuple(ring.parts(c)[1] for c in w)
    unit_led = [f for f in polys if ring.is_unit(f[-1])]
    if not unit_led:
        return CanonicalIdeal(IdealType.LI2, g1=g1)
    min_monic_len = min(len(f) for f in unit_led)
    F = sk.monic_scale(next(f for f in unit_led if len(f) == min_monic_len))
    f0 = sk.bar_poly(F)
    F1 = sk.poly(tuple(ring.parts(c)[1] for c in F))
    _, f1 = sk.right_divmod(F1, g1)
    return CanonicalIdeal(IdealType.LI3, g1=g1, f0=f0, f1=f1)


@dataclass(frozen=True)
class IdealRecord:
    ideal: CanonicalIdeal
    span: CodeSpan


def enumerate_ideal_records(ctx: CodeContext) -> list[IdealRecord]:
    """Every left ideal exactly once, with its span, in canonical order."""
    ctx.check_bruteforce_bound("ideal enumeration")
    sk = ctx.skew
    ring = ctx.ring
    q = ring.q
    n = ctx.n
    xnl = ctx.modulus_poly
    xnl_res = sk.bar_poly(xnl)
    lam_is_residue = ring.parts(ctx.lam_idx)[1] == 0
    res_divisors = monic_right_divisors(xnl_res, n, ctx, residue_only=True)

    spans: dict[frozenset, CodeSpan] = {}

    def add_candidate(gens: list[Poly]) -> None:
        span = ctx.span_from_generators(gens)
        spans.setdefault(span.words, span)

    # LI-1 candidates: monic right divisors g0 + u*g1 of x^n - lambda, found
    # by lifting every residue divisor g0 with every u-part of lower degree.
    for g0 in res_divisors:
        d0 = len(g0) - 1
        for upart in itertools.product(range(q), repeat=d0):
            g = sk.add(g0, sk.u_times(sk.poly(upart)))
            if sk.is_right_divisor(g, xnl):
                add_candidate([g])

    # LI-2 candidates: u * g1 for residue divisors g1 of degree < n.
    for g1 in res_divisors:
        if len(g1) - 1 < n:
            add_candidate([sk.u_times(g1)])

    # LI-3 candidates: pairs (u*g1, f0 + u*f1) subject to the degree chain
    # deg f1 < deg g1 < deg f0 < n, the divisibility chain g1 | f0 | x^n - bar(lambda),
    # and (when lambda is residue) the compatibility of f1 with g1.
    for f0 in res_divisors:
        d_f0 = len(f0) - 1
        if not 0 < d_f0 < n:
            continue
        qf = sk.right_quotient(xnl, f0) if lam_is_residue else None
        shifted_qf = sk.shift_through_u(qf) if qf is not None else None
        for g1 in monic_right_divisors(f0, d_f0 - 1, ctx, residue_only=True):
            d_g1 = len(g1) - 1
            for f1coeffs in itertools.product(range(q), repeat=d_g1):
                f1 = sk.poly(f1coeffs)
                if shifted_qf is not None:
                    target = sk.mul(shifted_qf, f1)
                    if sk.right_divmod(target, g1)[1]:
                        continue
                add_candidate([sk.u_times(g1), sk.add(f0, sk.u_times(f1))])

    records = [IdealRecord(canonicalize(span, ctx, validate=False), span) for span in spans.values()]
    records.sort(key=lambda rec: ideal_sort_key(rec.ideal, ctx))
    return records


def enumerate_ideals(ctx: CodeContext) -> list[CanonicalIdeal]:
    return [rec.ideal for rec in enumerate_ideal_records(ctx)]


def ideal_lattice(ideals: Sequence[CanonicalIdeal], ctx: CodeContext) -> list[tuple[int, int]]:
    """Hasse diagram cover edges (i, j): span(ideals[j]) is a maximal proper
    subspan of span(ideals[i]) among the given ideals."""
    spans = [ideal.span(ctx).words for ideal in ideals]
    below = [
        [j for j in range(len(ideals)) if j != i and spans[j] < spans[i]]
        for i in range(len(ideals))
    ]
    edges = []
    for i, js in enumerate(below):
        for j in js:
            if not any(spans[j] < spans[k] for k in js if k != j):
                edges.append((i, j))
    return edges


def dot_lattice(ideals: Sequence[CanonicalIdeal], edges: Iterable[tuple[int, int]], ctx: CodeContext) -> str:
    """Graphviz rendering of an ideal lattice; edges point to smaller ideals."""
    lines = ["digraph ideal_lattice {", "  rankdir=TB;", "  node [shape=box];"]
    for i, ideal in enumerate(ideals):
        label, sub = ideal.type_label(ctx)
        lines.append(f'  n{i} [label="<{label}>_{sub}"];')
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines)


def json_listing(ideals: Sequence[CanonicalIdeal], ctx: CodeContext) -> list[dict]:
    from .parsing import poly_str

    out = []
    for ideal in ideals:
        gens = [poly_str(g, ctx.ring) for g in ideal.generators(ctx)]
        out.append(
            {
                "type": ideal.kind.name,
                "label": ideal.label(ctx),
                "generators": gens,
                "cardinality": ideal.cardinality(ctx),
            }
        )
    return out
