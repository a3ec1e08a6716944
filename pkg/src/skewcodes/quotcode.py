"""Codes as left ideals of R[x; Theta] / <x^n - lambda>.

A :class:`CodeContext` validates the constacyclic data: lambda must be a unit
fixed by Theta and n a multiple of the order of Theta, which together make
x^n - lambda central so the quotient ring is well defined.  Codewords of
length n are interchangeable with their polynomial representatives of degree
below n; a code is closed under the twisted constacyclic shift

    (a_0, ..., a_{n-1})  ->  (Theta(lambda * a_{n-1}), Theta(a_0), ..., Theta(a_{n-2}))

exactly when its polynomial set is a left ideal of the quotient.

Spans are materialized as explicit codeword sets by iterative module closure
over the shift orbit of the generators.  That computation deliberately shares
no code with the generator/parity-matrix or dual-generator formulas, so it
doubles as an independent oracle for them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .chainring import ChainRing, RingAutomorphism, RingElement
from .gf import GF
from .skewpoly import Poly, SkewPolyRing

Word = tuple[int, ...]

DEFAULT_MAX_BRUTEFORCE = 10**6


class BoundExceededError(RuntimeError):
    """An exhaustive computation would exceed the configured search bound."""


class CodeContext:
    """Validated parameters of the quotient ring R[x; Theta] / <x^n - lambda>."""

    def __init__(
        self,
        ring: ChainRing,
        auto: RingAutomorphism,
        n: int,
        lam: int | RingElement,
        max_bruteforce: int = DEFAULT_MAX_BRUTEFORCE,
    ):
        if auto.ring != ring:
            raise ValueError("automorphism is defined on a different ring")
        if n < 1:
            raise ValueError(f"code length n={n} must be positive")
        lam_idx = lam.idx if isinstance(lam, RingElement) else int(lam)
        if not 0 <= lam_idx < ring.size:
            raise ValueError(f"lambda index {lam_idx} out of range")
        if not ring.is_unit(lam_idx):
            raise ValueError(
                f"lambda={ring.format_idx(lam_idx)} is not a unit, so x^{n}-lambda cannot define a constacyclic shift"
            )
        if not auto.fixes(lam_idx):
            raise ValueError(
                f"lambda={ring.format_idx(lam_idx)} is not fixed by {auto!r}; x^{n}-lambda is not central"
            )
        if n % auto.order != 0:
            raise ValueError(
                f"n={n} is not a multiple of ord(Theta)={auto.order}; x^{n}-lambda is not central"
            )
        self.ring = ring
        self.field: GF = ring.field
        self.auto = auto
        self.n = n
        self.lam_idx = lam_idx
        self.max_bruteforce = max_bruteforce
        self.skew = SkewPolyRing(ring, auto)
        self.modulus_poly: Poly = self.skew.add(
            self.skew.x_power(n), self.skew.constant(ring.neg(lam_idx))
        )
        assert self.skew.is_central(self.modulus_poly)
        self._h_cache: dict[Poly, Poly] = {}

    @classmethod
    def create(
        cls,
        p: int = 3,
        m: int = 1,
        theta_exp: int = 0,
        beta: int | Sequence[int] = 1,
        n: int = 2,
        lam: int | Sequence[int] | str = 1,
        modulus: Sequence[int] | None = None,
        max_bruteforce: int = DEFAULT_MAX_BRUTEFORCE,
    ) -> CodeContext:
        """Convenience constructor from raw parameters.

        ``beta`` and ``lam`` accept ints (reduced mod p) or coefficient
        vectors; ``lam`` additionally accepts a ring-element string such as
        ``"1+2*u"`` (parsed by :mod:`skewcodes.parsing`).
        """
        ring = ChainRing(GF(p, m, modulus))
        auto = RingAutomorphism(ring, theta_exp, beta)
        if isinstance(lam, str):
            from .parsing import parse_ring_element

            lam_elem = parse_ring_element(lam, ring)
        else:
            lam_elem = ring.element(lam)
        return cls(ring, auto, n, lam_elem, max_bruteforce=max_bruteforce)

    # -- canonical representatives -----------------------------------------

    def reduce_mod(self, f: Poly) -> Poly:
        """The unique representative of degree < n (right remainder by x^n - lambda)."""
        if len(f) <= self.n:
            return f
        return self.skew.right_divmod(f, self.modulus_poly)[1]

    def word_from_poly(self, f: Poly) -> Word:
        f = self.reduce_mod(f)
        return f + (0,) * (self.n - len(f))

    def poly_from_word(self, w: Word) -> Poly:
        out = list(w)
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def word(self, coeffs: Iterable[int | RingElement]) -> Word:
        out = tuple(c.idx if isinstance(c, RingElement) else int(c) for c in coeffs)
        if len(out) != self.n:
            raise ValueError(f"expected {self.n} entries, got {len(out)}")
        return out

    @property
    def zero_word(self) -> Word:
        return (0,) * self.n

    # -- the twisted shift ----------------------------------------------------

    def constashift(self, w: Word) -> Word:
        theta = self.auto
        first = theta(self.ring.mul(self.lam_idx, w[-1]))
        return (first,) + tuple(theta(c) for c in w[:-1])

    # -- exhaustive enumeration ----------------------------------------------

    def check_bruteforce_bound(self, what: str = "enumeration of the ambient space") -> None:
        total = self.ring.size**self.n
        if total > self.max_bruteforce:
            raise BoundExceededError(
                f"{what} needs {total} vectors, above the configured bound {self.max_bruteforce}"
            )

    @cached_property
    def all_words(self) -> list[Word]:
        """Every vector of R^n; guarded by the brute-force bound."""
        self.check_bruteforce_bound()
        return list(itertools.product(range(self.ring.size), repeat=self.n))

    @cached_property
    def all_words_array(self):
        """``all_words`` as an (|R|^n, n) integer array for vectorized scans."""
        import numpy as np

        return np.asarray(self.all_words, dtype=np.int64)

    @cached_property
    def ring_add_flat(self):
        """Flattened ring addition table: entry [x * |R| + y] = x + y."""
        import numpy as np

        return np.asarray(
            [c for row in self.ring.add_table for c in row], dtype=np.int64
        )

    # -- span computation -------------------------------------------------------

    def word_add(self, v: Word, w: Word) -> Word:
        radd = self.ring.add_table
        return tuple(radd[a][b] for a, b in zip(v, w))

    def word_scale(self, a: int, w: Word) -> Word:
        rmul = self.ring.mul_table
        row = rmul[a]
        return tuple(row[c] for c in w)

    def module_generators(self, gens: Iterable[Poly]) -> list[Word]:
        """The shift orbit {x^i * g mod (x^n - lambda)} as codewords."""
        out: list[Word] = []
        seen: set[Word] = set()
        for g in gens:
            g = self.reduce_mod(self.skew.poly(g))
            for i in range(self.n):
                w = self.word_from_poly(self.skew.mul(self.skew.x_power(i), g))
                if w not in seen:
                    seen.add(w)
                    out.append(w)
        return out

    def span_from_generators(self, gens: Iterable[Poly]) -> CodeSpan:
        """Smallest left ideal containing the generators, as a codeword set.

        Iterative closure: starting from {0}, fold in one shift-orbit word at
        a time, replacing the current set S by {s + a*v : s in S, a in R}.
        S stays a module at every step, so the fixpoint is the R-span of the
        orbit, which is exactly the left ideal generated by ``gens``.
        """
        self.check_bruteforce_bound("span closure")
        orbit = self.module_generators(gens)
        span: set[Word] = {self.zero_word}
        mul_rows = self.ring.mul_table
        for v in orbit:
            if v in span:
                continue
            multiples = {tuple(row[c] for c in v) for row in mul_rows}
            new: set[Word] = set()
            radd = self.ring.add_table
            for t in multiples:
                pairs = tuple(zip(t, range(self.n)))
                for s in span:
                    new.add(tuple(radd[a][s[i]] for a, i in pairs))
            span = new
        return CodeSpan(frozenset(span), tuple(orbit))

    # -- generator and parity-check matrices ------------------------------------

    def _require_monic_divisor(self, g: Poly) -> Poly:
        g = self.skew.poly(g)
        if not self.skew.is_monic(g):
            raise ValueError("generator must be monic")
        if not self.skew.is_right_divisor(g, self.modulus_poly):
            raise ValueError("generator must right-divide x^n - lambda")
        return g

    def quotient_h(self, g: Poly) -> Poly:
        """h with h*g = x^n - lambda, cached per generator."""
        g = self._require_monic_divisor(g)
        h = self._h_cache.get(g)
        if h is None:
            h = self.skew.right_quotient(self.modulus_poly, g)
            self._h_cache[g] = h
        return h

    def generator_matrix(self, g: Poly) -> list[list[int]]:
        """k x n matrix whose i-th row is the coefficient vector of x^i * g."""
        g = self._require_monic_divisor(g)
        k = self.n - (len(g) - 1)
        return [list(self.word_from_poly(self.skew.mul(self.skew.x_power(i), g))) for i in range(k)]

    def parity_check_matrix(self, g: Poly) -> list[list[int]]:
        """(n-k) x n matrix H with row r carrying Theta^(r+j)(h[k-j]) at column r+j.

        Every codeword c satisfies c * H^T = 0, and conversely; the entries
        are reversed, Theta-twisted coefficients of h = (x^n - lambda) / g.
        """
        h = self.quotient_h(g)
        k = len(h) - 1
        rows = self.n - k
        pow_apply = self.auto.pow_apply
        H = [[0] * self.n for _ in range(rows)]
        for r in range(rows):
            for j in range(k + 1):
                H[r][r + j] = pow_apply(h[k - j], r + j)
        return H

    def matrix_annihilates(self, w: Word, H: Sequence[Sequence[int]]) -> bool:
        radd, rmul = self.ring.add, self.ring.mul
        for row in H:
            acc = 0
            for c, e in zip(w, row):
                if c and e:
                    acc = radd(acc, rmul(c, e))
            if acc:
                return False
        return True

    def member_via_check(self, c: Poly, g: Poly) -> bool:
        """Membership test c in <g> via c*h = 0 in the quotient."""
        h = self.quotient_h(g)
        c = self.reduce_mod(self.skew.poly(c))
        return not self.reduce_mod(self.skew.mul(c, h))

    def is_classically_constacyclic(self, g: Poly) -> bool:
        """True when every coefficient of g is fixed by Theta, i.e. the code is
        closed under the untwisted constacyclic shift as well."""
        g = self._require_monic_divisor(g)
        return all(self.auto.fixes(c) for c in g)

    # -- presentation -----------------------------------------------------------

    def word_sort_key(self, w: Word):
        return tuple(self.ring.sort_key(c) for c in w)

    def __repr__(self) -> str:
        lam = self.ring.format_idx(self.lam_idx)
        return f"CodeContext({self.ring!r}, {self.auto!r}, n={self.n}, lambda={lam})"


@dataclass(frozen=True, eq=False)
class CodeSpan:
    """A materialized code: the set of codewords plus the module generators
    that produced it (kept for cheap orthogonality checks)."""

    words: frozenset[Word]
    gens: tuple[Word, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: Word) -> bool:
        return w in self.words

    def __iter__(self):
        return iter(self.words)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CodeSpan) and other.words == self.words

    def __hash__(self) -> int:
        return hash(self.words)

    def sorted_words(self, ctx: CodeContext) -> list[Word]:
        return sorted(self.words, key=ctx.word_sort_key)

    def is_shift_closed(self, ctx: CodeContext) -> bool:
        return all(ctx.constashift(w) in self.words for w in self.words)

    def is_left_ideal(self, ctx: CodeContext) -> bool:
        """Full check: additive closure, scalar closure, shift closure."""
        words = self.words
        if ctx.zero_word not in words:
            return False
        if not self.is_shift_closed(ctx):
            return False
        for w in words:
            for a in ctx.ring.element_indices():
                if ctx.word_scale(a, w) not in words:
                    return False
        return all(ctx.word_add(v, w) in words for v in words for w in words)

    def is_left_ideal_fast(self, ctx: CodeContext) -> bool:
        """Scalar and shift closure plus the size being a power of the residue
        field order; used as a cheap validity screen for large spans."""
        size = len(self.words)
        q = ctx.ring.q
        while size % q == 0:
            size //= q
        if size != 1:
            return False
        if ctx.zero_word not in self.words:
            return False
        if not self.is_shift_closed(ctx):
            return False
        return all(
            ctx.word_scale(a, w) in self.words for w in self.words for a in (ctx.ring.u_idx,)
        )
