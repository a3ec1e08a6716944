"""Independent reference implementations used as oracles by the tests.

Everything here recomputes results from first principles (schoolbook
polynomial arithmetic, exhaustive search, literal fixpoint closure) without
going through the code paths under test.
"""

from __future__ import annotations

import itertools


# -- prime field / extension field oracles ------------------------------------


def schoolbook_gf_mul(a_coeffs, b_coeffs, modulus, p):
    """Multiply coefficient vectors over F_p and reduce mod the field modulus."""
    out = [0] * (len(a_coeffs) + len(b_coeffs) - 1)
    for i, x in enumerate(a_coeffs):
        for j, y in enumerate(b_coeffs):
            out[i + j] = (out[i + j] + x * y) % p
    # long division by the monic modulus
    m = len(modulus) - 1
    for k in range(len(out) - 1, m - 1, -1):
        c = out[k]
        if c:
            for j in range(m + 1):
                out[k - m + j] = (out[k - m + j] - c * modulus[j]) % p
    return tuple(out[:m]) + (0,) * (m - len(out[:m]))


def exhaustive_inverse(field, a):
    """Find the inverse by scanning all field elements."""
    for b in range(field.q):
        if field.mul(a, b) == field.one.idx:
            return b
    return None


def frobenius_by_powering(field, a, s):
    """a^(p^s) by repeated multiplication, using only field.mul."""
    result = a
    for _ in range(s % field.m):
        acc = field.one.idx
        for _ in range(field.p):
            acc = field.mul(acc, result)
        result = acc
    return result


# -- chain ring oracle ---------------------------------------------------------


def ring_mul_via_poly(ring, x, y):
    """(a0 + a1 U)(b0 + b1 U) mod U^2, with field arithmetic on the parts."""
    f = ring.field
    a0, a1 = ring.parts(x)
    b0, b1 = ring.parts(y)
    c0 = f.mul(a0, b0)
    c1 = f.add(f.mul(a0, b1), f.mul(a1, b0))
    return ring.pack(c0, c1)


# -- skew polynomial oracle ------------------------------------------------------


def naive_skew_mul(sk, f, g):
    """Term-by-term product, moving each coefficient through x one step at a
    time with repeated single applications of the automorphism."""
    ring = sk.ring
    auto = sk.auto
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            moved = b
            for _ in range(i):
                moved = auto(moved)
            out[i + j] = ring.add(out[i + j], ring.mul(a, moved))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


# -- span and dual oracles ----------------------------------------------------------


def fixpoint_span(ctx, gens):
    """Literal fixpoint closure: start from the shift orbit of the generators
    and repeatedly add a*v + w for all scalars a and members v, w."""
    current = set(ctx.module_generators(gens))
    current.add(ctx.zero_word)
    while True:
        additions = set()
        for v in current:
            for a in ctx.ring.element_indices():
                av = ctx.word_scale(a, v)
                for w in current:
                    s = ctx.word_add(av, w)
                    if s not in current:
                        additions.add(s)
        if not additions:
            return current
        current |= additions


def plain_dual(ctx, words, hermitian=False):
    """Orthogonal complement by scanning all vector pairs, no shortcuts."""
    ring = ctx.ring
    theta = ctx.auto
    out = set()
    for v in ctx.all_words:
        for c in words:
            acc = 0
            for a, b in zip(v, c):
                acc = ring.add(acc, ring.mul(a, theta(b) if hermitian else b))
            if acc:
                break
        else:
            out.add(v)
    return out


def null_space_count(ctx, H):
    """Number of vectors annihilated by every row of H, vectorized."""
    import numpy as np

    words = ctx.all_words_array
    size = ctx.ring.size
    radd_flat = ctx.ring_add_flat
    alive = np.ones(len(words), dtype=bool)
    for row in H:
        acc = np.zeros(len(words), dtype=np.int64)
        for i, e in enumerate(row):
            if e == 0:
                continue
            col = np.asarray([ctx.ring.mul(v, e) for v in range(size)], dtype=np.int64)
            acc = radd_flat[acc * size + col[words[:, i]]]
        alive &= acc == 0
    return int(alive.sum())
