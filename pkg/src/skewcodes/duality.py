"""Euclidean and Hermitian dual codes.

The Euclidean inner product on R^n is sum(u_i * v_i); the Hermitian one,
available when Theta has order 2, is sum(u_i * Theta(v_i)).  The dual of a
code closed under the (Theta, lambda) shift is closed under the
(Theta, lambda^-1) shift, so for lambda^2 = 1 duals stay in the same quotient
ring and have closed-form generators:

* a principal ideal <g> with monic right divisor g and complement
  h = (x^n - lambda) / g has Euclidean dual generated by reversal(h, deg h)
  and Hermitian dual generated by its coefficientwise Theta image;
* for <u*g1> and <u*g1, f0 + u*f1> the duals are two-generator ideals built
  from reversals of (x^n - lambda)/g1 and (x^n - lambda)/f0 * u, minus a
  correction u*m(x) determined by m*g1 = shift_through_u((x^n-lambda)/f0)*f1.

Every closed-form result is re-read into canonical form through
:func:`skewcodes.classify.canonicalize`.  The independent oracle
:func:`brute_dual` scans all of R^n and never touches these formulas.
"""

from __future__ import annotations

import enum

import numpy as np

from .classify import CanonicalIdeal, IdealType, canonicalize
from .quotcode import CodeContext, CodeSpan, Word
from .skewpoly import Poly


class InnerProduct(enum.Enum):
    EUCLIDEAN = "euclidean"
    HERMITIAN = "hermitian"


def _require_kind(kind: InnerProduct, ctx: CodeContext) -> None:
    if kind is InnerProduct.HERMITIAN and ctx.auto.order != 2:
        raise ValueError(
            f"the Hermitian inner product needs ord(Theta)=2, got {ctx.auto.order}"
        )


def inner(u: Word, v: Word, kind: InnerProduct, ctx: CodeContext) -> int:
    """<u, v> = sum u_i v_i, or sum u_i Theta(v_i) for the Hermitian form."""
    if len(u) != len(v):
        raise ValueError("inner product needs equal lengths")
    _require_kind(kind, ctx)
    radd, rmul = ctx.ring.add, ctx.ring.mul
    theta = ctx.auto
    acc = 0
    if kind is InnerProduct.EUCLIDEAN:
        for a, b in zip(u, v):
            if a and b:
                acc = radd(acc, rmul(a, b))
    else:
        for a, b in zip(u, v):
            if a and b:
                acc = radd(acc, rmul(a, theta(b)))
    return acc


def _spanning_check_set(span: CodeSpan, ctx: CodeContext) -> list[Word]:
    """A small residue-linear spanning subset of the span.

    Orthogonality is additive and residue-linear in the second slot for both
    inner products, so checking a vector against a spanning subset is
    equivalent to checking it against every codeword.  Spans built by module
    closure carry their generators; together with their u-multiples those
    span the set over the residue field.  Otherwise fall back to a greedy
    basis extraction, stopping once the residue dimension log_q|span| is
    reached.
    """
    if span.gens:
        out: list[Word] = []
        seen: set[Word] = set()
        for g in span.gens:
            for w in (g, ctx.word_scale(ctx.ring.u_idx, g)):
                if any(w) and w not in seen:
                    seen.add(w)
                    out.append(w)
        return out
    field = ctx.field
    q = field.q
    target = 0
    size = len(span.words)
    while size > 1:
        size //= q
        target += 1
    basis: list[list[int]] = []
    pivots: list[int] = []
    picked: list[Word] = []
    for w in span.words:
        # flatten to residue coordinates: constant parts then u-parts
        vec = [0] * (2 * ctx.n)
        for i, c in enumerate(w):
            a, b = ctx.ring.parts(c)
            vec[i] = a
            vec[ctx.n + i] = b
        for row, piv in zip(basis, pivots):
            if vec[piv]:
                factor = field.mul(vec[piv], field.inv(row[piv]))
                vec = [field.sub(x, field.mul(factor, y)) for x, y in zip(vec, row)]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is not None:
            basis.append(vec)
            pivots.append(piv)
            picked.append(w)
            if len(picked) == target:
                break
    return picked


def brute_dual(span: CodeSpan, kind: InnerProduct, ctx: CodeContext) -> CodeSpan:
    """Exhaustive orthogonal complement: scan every vector of R^n.

    This is the oracle for all closed-form dual computations; it shares no
    code with them.  The scan is vectorized with numpy over the precomputed
    ring tables, which changes nothing about its exhaustiveness.
    """
    _require_kind(kind, ctx)
    checks = _spanning_check_set(span, ctx)
    theta = ctx.auto
    if kind is InnerProduct.HERMITIAN:
        checks = [tuple(theta(c) for c in w) for w in checks]
    if not checks:
        return CodeSpan(frozenset(ctx.all_words))
    words = ctx.all_words_array
    size = ctx.ring.size
    radd_flat = ctx.ring_add_flat
    mul_table = ctx.ring.mul_table
    alive = np.ones(len(words), dtype=bool)
    for w in checks:
        acc = np.zeros(len(words), dtype=np.int64)
        for i, wi in enumerate(w):
            if wi == 0:
                continue
            col = np.asarray([mul_table[v][wi] for v in range(size)], dtype=np.int64)
            acc = radd_flat[acc * size + col[words[:, i]]]
        alive &= acc == 0
    survivors = [tuple(row) for row in words[alive].tolist()]
    return CodeSpan(frozenset(survivors))


# -- closed-form duals --------------------------------------------------------


def _require_lambda_square_one(ctx: CodeContext) -> None:
    lam = ctx.lam_idx
    if ctx.ring.mul(lam, lam) != ctx.ring.one_idx:
        raise ValueError(
            f"dual generators need lambda^2 = 1, got lambda={ctx.ring.format_idx(lam)}"
        )


def _require_lambda_pm_one(ctx: CodeContext) -> None:
    lam = ctx.lam_idx
    if lam not in (ctx.ring.one_idx, ctx.ring.neg(ctx.ring.one_idx)):
        raise ValueError(
            f"the three-type dual computation needs lambda in {{1, -1}}, got {ctx.ring.format_idx(lam)}"
        )


def euclidean_dual_li1(g: Poly, ctx: CodeContext) -> Poly:
    """Monic generator of the Euclidean dual of the principal ideal <g>."""
    _require_lambda_square_one(ctx)
    h = ctx.quotient_h(g)
    return ctx.skew.monic_scale(ctx.skew.reversal(h, len(h) - 1))


def hermitian_dual_li1(g: Poly, ctx: CodeContext) -> Poly:
    """Monic generator of the Hermitian dual of <g>; needs ord(Theta) = 2."""
    _require_kind(InnerProduct.HERMITIAN, ctx)
    _require_lambda_square_one(ctx)
    h = ctx.quotient_h(g)
    return ctx.skew.monic_scale(ctx.skew.coeff_theta(ctx.skew.reversal(h, len(h) - 1)))


def compute_m(f0: Poly, f1: Poly, g1: Poly, ctx: CodeContext) -> Poly:
    """The residue polynomial m with m*g1 = shift_through_u((x^n-lambda)/f0)*f1.

    For canonical two-generator data the division is exact; a nonzero
    remainder signals an inconsistent generator triple.
    """
    sk = ctx.skew
    if ctx.ring.parts(ctx.lam_idx)[1] != 0:
        raise ValueError("m(x) is only defined when lambda lies in the residue field")
    qf = sk.right_quotient(ctx.modulus_poly, sk.poly(f0))
    target = sk.mul(sk.shift_through_u(qf), sk.poly(f1))
    m, r = sk.right_divmod(target, sk.poly(g1))
    if r:
        raise ValueError("inconsistent generator triple: g1 does not right-divide the shifted product")
    return m


def _dual_generators(ideal: CanonicalIdeal, ctx: CodeContext) -> list[Poly]:
    """Euclidean dual generators before re-canonicalization."""
    sk = ctx.skew
    if ideal.kind is IdealType.LI1:
        return [euclidean_dual_li1(ideal.g, ctx)]
    if ideal.kind is IdealType.LI2:
        qg = sk.right_quotient(ctx.modulus_poly, ideal.g1)
        return [sk.constant(ctx.ring.u_idx), sk.reversal(qg, len(qg) - 1)]
    m = compute_m(ideal.f0, ideal.f1, ideal.g1, ctx)
    qf = sk.right_quotient(ctx.modulus_poly, ideal.f0)
    qg = sk.right_quotient(ctx.modulus_poly, ideal.g1)
    first = sk.reversal(sk.mul(qf, sk.constant(ctx.ring.u_idx)), len(qf) - 1)
    second = sk.reversal(sk.sub(qg, sk.u_times(m)), len(qg) - 1)
    return [first, second]


def euclidean_dual_ideal(ideal: CanonicalIdeal, ctx: CodeContext) -> CanonicalIdeal:
    """Canonical form of the Euclidean dual of any left ideal; lambda = +-1."""
    _require_lambda_pm_one(ctx)
    gens = _dual_generators(ideal, ctx)
    if ideal.kind is IdealType.LI1:
        return CanonicalIdeal(IdealType.LI1, g=gens[0])
    return canonicalize(ctx.span_from_generators(gens), ctx, validate=False)


def hermitian_dual_ideal(ideal: CanonicalIdeal, ctx: CodeContext) -> CanonicalIdeal:
    """Canonical form of the Hermitian dual; needs ord(Theta) = 2, lambda = +-1."""
    _require_kind(InnerProduct.HERMITIAN, ctx)
    _require_lambda_pm_one(ctx)
    sk = ctx.skew
    if ideal.kind is IdealType.LI1:
        return CanonicalIdeal(IdealType.LI1, g=hermitian_dual_li1(ideal.g, ctx))
    gens = [sk.coeff_theta(g) for g in _dual_generators(ideal, ctx)]
    return canonicalize(ctx.span_from_generators(gens), ctx, validate=False)


def dual_ideal(ideal: CanonicalIdeal, kind: InnerProduct, ctx: CodeContext) -> CanonicalIdeal:
    if kind is InnerProduct.EUCLIDEAN:
        return euclidean_dual_ideal(ideal, ctx)
    return hermitian_dual_ideal(ideal, ctx)


# -- self-duality ----------------------------------------------------------------


def is_self_dual_li1(g: Poly, kind: InnerProduct, ctx: CodeContext) -> bool:
    """Self-duality test for the code generated by a monic right divisor g.

    For n = 2k the code can only be self-dual when deg g = k, in which case
    self-duality is equivalent to g * h = x^n - lambda for the explicit
    candidate h with h_0 = Theta^-k(g_0^-1) (Euclidean; the Hermitian variant
    shifts the twist by one) and h_i = Theta^(i-k)(g_0^-1 g_{k-i}).
    """
    _require_kind(kind, ctx)
    _require_lambda_square_one(ctx)
    if ctx.n % 2:
        raise ValueError("self-dual codes need even length")
    g = ctx._require_monic_divisor(g)
    k = ctx.n // 2
    if len(g) - 1 != k:
        return False
    ring = ctx.ring
    sk = ctx.skew
    pow_apply = ctx.auto.pow_apply
    g0_inv = ring.inv(g[0])
    offset = -k if kind is InnerProduct.EUCLIDEAN else -k - 1
    coeffs = [pow_apply(g0_inv, offset)]
    for i in range(1, k):
        coeffs.append(pow_apply(ring.mul(g0_inv, g[k - i]), i + offset))
    coeffs.append(ring.one_idx)
    candidate_h = sk.poly(coeffs)
    return sk.mul(g, candidate_h) == ctx.modulus_poly


def is_self_dual_ideal(ideal: CanonicalIdeal, kind: InnerProduct, ctx: CodeContext) -> bool:
    """Self-duality via the canonical dual computation."""
    return dual_ideal(ideal, kind, ctx) == ideal
