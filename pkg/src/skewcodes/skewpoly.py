"""Skew polynomials over R = F_q + u*F_q with multiplication twisted by Theta.

Multiplication follows the rule ``x * a = Theta(a) * x``, extended by
associativity and distributivity, so ``(a x^i)(b x^j) = a Theta^i(b) x^(i+j)``.
The ring is noncommutative whenever Theta is not the identity, and it is not
a unique factorization ring; divisibility is therefore one sided.

Polynomials are plain tuples of ring-element indices, constant coefficient
first, with trailing zeros trimmed.  The zero polynomial is the empty tuple
and its degree is ``NEG_INF``, which compares below every integer, so the
division loops need no special casing.

Besides the two division algorithms this module implements the coefficient
transforms used to express dual-code generators:

* ``reversal(w, d)``: the polynomial with j-th coefficient Theta^j(w[d - j]).
  It equals ``x^d * phi(w)`` where phi is the anti-monomorphism sending
  ``sum a_i x^i`` to ``sum x^-i a_i`` in the localization inverting x; the
  localization itself is never materialized.
* ``coeff_theta(f)``: Theta applied to every coefficient (a ring
  automorphism of the skew polynomial ring).
* ``shift_through_u(f)`` / ``shift_u_through(f)``: the residue polynomials
  g with ``f * u = u * g`` resp. ``u * f = g * u``, using
  Theta^i(u) = nu_i * u.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .chainring import ChainRing, RingAutomorphism, RingElement

NEG_INF = float("-inf")

Poly = tuple[int, ...]


class SkewPolyRing:
    """R[x; Theta] for a chain ring R and one of its automorphisms."""

    def __init__(self, ring: ChainRing, auto: RingAutomorphism):
        if auto.ring != ring:
            raise ValueError("automorphism is defined on a different ring")
        self.ring = ring
        self.auto = auto
        self.zero: Poly = ()
        self.one: Poly = (ring.one_idx,)
        self.x: Poly = (0, ring.one_idx)

    # -- construction -----------------------------------------------------

    def poly(self, coeffs: Iterable[int | RingElement]) -> Poly:
        out = []
        for c in coeffs:
            if isinstance(c, RingElement):
                if c.ring != self.ring:
                    raise ValueError("coefficient belongs to a different ring")
                out.append(c.idx)
            else:
                out.append(int(c))
        while out and out[-1] == 0:
            out.pop()
        for c in out:
            if not 0 <= c < self.ring.size:
                raise ValueError(f"coefficient index {c} out of range")
        return tuple(out)

    def from_pairs(self, pairs: Iterable[tuple[int, int]]) -> Poly:
        """Build from (exponent, ring index) pairs; repeated exponents add."""
        if not pairs:
            return ()
        pairs = list(pairs)
        out = [0] * (max(e for e, _ in pairs) + 1)
        for e, c in pairs:
            out[e] = self.ring.add(out[e], c)
        return self.poly(out)

    def monomial(self, coef: int, exp: int) -> Poly:
        if coef == 0:
            return ()
        return (0,) * exp + (coef,)

    def x_power(self, exp: int) -> Poly:
        return self.monomial(self.ring.one_idx, exp)

    def constant(self, coef: int) -> Poly:
        return (coef,) if coef else ()

    # -- basic queries ------------------------------------------------------

    @staticmethod
    def degree(f: Poly) -> int | float:
        return len(f) - 1 if f else NEG_INF

    @staticmethod
    def lead(f: Poly) -> int:
        if not f:
            raise ValueError("the zero polynomial has no leading coefficient")
        return f[-1]

    def is_monic(self, f: Poly) -> bool:
        return bool(f) and f[-1] == self.ring.one_idx

    def is_residue(self, f: Poly) -> bool:
        """True when every coefficient lies in the subfield F_q (zero u-part)."""
        q = self.ring.q
        return all(c < q for c in f)

    def coefficient(self, f: Poly, i: int) -> int:
        return f[i] if 0 <= i < len(f) else 0

    # -- additive structure ---------------------------------------------------

    def add(self, f: Poly, g: Poly) -> Poly:
        if len(f) < len(g):
            f, g = g, f
        radd = self.ring.add
        out = list(f)
        for i, c in enumerate(g):
            out[i] = radd(out[i], c)
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def neg(self, f: Poly) -> Poly:
        rneg = self.ring.neg
        return tuple(rneg(c) for c in f)

    def sub(self, f: Poly, g: Poly) -> Poly:
        return self.add(f, self.neg(g))

    # -- multiplication ---------------------------------------------------------

    def const_mul(self, a: int, f: Poly) -> Poly:
        """Left multiplication by the constant a."""
        if a == 0:
            return ()
        rmul = self.ring.mul
        out = [rmul(a, c) for c in f]
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def mul(self, f: Poly, g: Poly) -> Poly:
        if not f or not g:
            return ()
        rmul = self.ring.mul
        radd = self.ring.add
        pow_apply = self.auto.pow_apply
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a == 0:
                continue
            for j, b in enumerate(g):
                if b == 0:
                    continue
                out[i + j] = radd(out[i + j], rmul(a, pow_apply(b, i)))
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def pow(self, f: Poly, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative polynomial powers are undefined")
        result = self.one
        for _ in range(k):
            result = self.mul(result, f)
        return result

    # -- division ----------------------------------------------------------------

    def right_divmod(self, f: Poly, g: Poly) -> tuple[Poly, Poly]:
        """Unique (q, r) with f = q*g + r and r = 0 or deg r < deg g.

        Each step cancels the leading term of the remainder by subtracting
        ``a_r Theta^(r-s)(b_s^-1) x^(r-s) g`` where a_r is the current leading
        coefficient, b_s the (unit) leading coefficient of g and s = deg g.
        """
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.ring.is_unit(g[-1]):
            raise ValueError("right division needs a unit leading coefficient in the divisor")
        ring = self.ring
        rmul, rsub = ring.mul, ring.sub
        pow_apply = self.auto.pow_apply
        s = len(g) - 1
        b_inv = ring.inv(g[-1])
        r = list(f)
        q = [0] * max(len(f) - s, 0)
        while len(r) - 1 >= s and r:
            shift = len(r) - 1 - s
            c = rmul(r[-1], pow_apply(b_inv, shift))
            q[shift] = c
            for j, gc in enumerate(g):
                if gc:
                    r[shift + j] = rsub(r[shift + j], rmul(c, pow_apply(gc, shift)))
            assert r[-1] == 0
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        while q and q[-1] == 0:
            q.pop()
        return tuple(q), tuple(r)

    def left_divmod(self, f: Poly, g: Poly) -> tuple[Poly, Poly]:
        """Unique (q, r) with f = g*q + r and r = 0 or deg r < deg g.

        The cancellation step subtracts ``g Theta^(-s)(a_r b_s^-1) x^(r-s)``;
        it relies on Theta being invertible, which every automorphism is.
        """
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.ring.is_unit(g[-1]):
            raise ValueError("left division needs a unit leading coefficient in the divisor")
        ring = self.ring
        rmul, rsub = ring.mul, ring.sub
        pow_apply = self.auto.pow_apply
        s = len(g) - 1
        b_inv = ring.inv(g[-1])
        r = list(f)
        q = [0] * max(len(f) - s, 0)
        while len(r) - 1 >= s and r:
            shift = len(r) - 1 - s
            c = pow_apply(rmul(r[-1], b_inv), -s)
            q[shift] = c
            # subtract g * (c x^shift): coefficient j+shift gains g_j Theta^j(c)
            for j, gc in enumerate(g):
                if gc:
                    r[shift + j] = rsub(r[shift + j], rmul(gc, pow_apply(c, j)))
            assert r[-1] == 0
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        while q and q[-1] == 0:
            q.pop()
        return tuple(q), tuple(r)

    def is_right_divisor(self, g: Poly, f: Poly) -> bool:
        """True when f = q*g for some q."""
        return not self.right_divmod(f, g)[1]

    def right_quotient(self, f: Poly, g: Poly) -> Poly:
        q, r = self.right_divmod(f, g)
        if r:
            raise ValueError("nonzero right remainder: divisor does not right-divide")
        return q

    def monic_scale(self, f: Poly) -> Poly:
        """Left-multiply by the inverse of the (unit) leading coefficient."""
        if not f:
            raise ValueError("cannot normalize the zero polynomial")
        return self.const_mul(self.ring.inv(f[-1]), f)

    # -- centrality -----------------------------------------------------------

    def is_central(self, f: Poly) -> bool:
        """True when f commutes with x and with every ring constant.

        Constants and x generate the whole skew polynomial ring, so commuting
        with them is equivalent to commuting with everything.
        """
        if self.mul(self.x, f) != self.mul(f, self.x):
            return False
        for c in self.ring.element_indices():
            cp = self.constant(c)
            if self.mul(cp, f) != self.mul(f, cp):
                return False
        return True

    # -- coefficient transforms --------------------------------------------------

    def coeff_theta(self, f: Poly) -> Poly:
        """Apply Theta to every coefficient."""
        return self.theta_power(f, 1)

    def theta_power(self, f: Poly, j: int) -> Poly:
        """Apply Theta^j coefficientwise, so x^j * f = theta_power(f, j) * x^j."""
        pow_apply = self.auto.pow_apply
        return tuple(pow_apply(c, j) for c in f)

    def reversal(self, w: Poly, d: int) -> Poly:
        """The polynomial with coefficient j equal to Theta^j(w[d - j]).

        Requires deg w <= d.  This is the concrete value of x^d * phi(w) for
        the coefficient-reversing anti-monomorphism phi, the combination in
        which phi ever occurs here.
        """
        if len(w) - 1 > d:
            raise ValueError(f"reversal needs deg w <= d, got deg {len(w) - 1} > {d}")
        pow_apply = self.auto.pow_apply
        coeff = self.coefficient
        out = [pow_apply(coeff(w, d - j), j) for j in range(d + 1)]
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def shift_through_u(self, f: Poly) -> Poly:
        """The residue polynomial g with f * u = u * g.

        g is determined only modulo the annihilator of u; the canonical
        representative with zero u-parts is returned, with coefficients
        bar(f_i) * nu_i.
        """
        field = self.ring.field
        bar = self.ring.bar
        nu = self.auto.nu
        out = [self.ring.embed(field.mul(bar(c), nu(i))) for i, c in enumerate(f)]
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def shift_u_through(self, f: Poly) -> Poly:
        """The residue polynomial g with u * f = g * u (coefficients bar(f_i)/nu_i)."""
        field = self.ring.field
        bar = self.ring.bar
        nu = self.auto.nu
        out = [self.ring.embed(field.mul(bar(c), field.inv(nu(i)))) for i, c in enumerate(f)]
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def u_times(self, f: Poly) -> Poly:
        """u * f as a polynomial (kills u-parts, lifts constants to u-multiples)."""
        ring = self.ring
        out = [ring.pack(0, ring.bar(c)) for c in f]
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def bar_poly(self, f: Poly) -> Poly:
        """Coefficientwise reduction modulo u, embedded back into R[x; Theta]."""
        bar = self.ring.bar
        out = [bar(c) for c in f]
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def coeff_elements(self, f: Poly) -> list[RingElement]:
        return [RingElement(self.ring, c) for c in f]

    def sort_key(self, f: Poly):
        return (len(f), tuple(self.ring.sort_key(c) for c in f))

    def __repr__(self) -> str:
        return f"SkewPolyRing({self.ring!r}, {self.auto!r})"
