"""Exact arithmetic in the prime field F_p and its extensions F_{p^m}.

An element of F_{p^m} is a residue of F_p[t] modulo a fixed monic irreducible
polynomial.  Internally an element is an index in ``range(p**m)`` whose base-p
digits are the coefficients of the residue representative (least significant
digit = constant coefficient).  All operations are table driven, which keeps
the desk-scale fields this package targets fast and allocation free.

The friendly wrapper :class:`FieldElement` carries its field along, so mixing
elements of different fields raises instead of silently producing garbage.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

# Default monic irreducible moduli, keyed by (p, m).  Coefficient vectors are
# listed constant term first with leading coefficient 1.  Any (p, m) outside
# this table falls back to a deterministic search (first irreducible in
# lexicographic order), so element naming stays reproducible across runs.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 1): (0, 1),
    (3, 2): (1, 0, 1),
    (5, 1): (0, 1),
    (7, 1): (0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _poly_divmod_fp(f: Sequence[int], g: Sequence[int], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Division in F_p[t]; g must have an invertible leading coefficient."""
    g = _trim(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_inv = pow(g[-1], -1, p)
    r = [c % p for c in f]
    q = [0] * max(len(r) - len(g) + 1, 0)
    while len(_trim(r)) >= len(g):
        r = list(_trim(r))
        shift = len(r) - len(g)
        c = (r[-1] * lead_inv) % p
        q[shift] = c
        for i, gc in enumerate(g):
            r[shift + i] = (r[shift + i] - c * gc) % p
    return _trim(q), _trim(r)


def _poly_mul_fp(f: Sequence[int], g: Sequence[int], p: int) -> tuple[int, ...]:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def _is_irreducible_fp(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by all monic polynomials of degree <= deg/2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = tuple(low) + (1,)
            _, r = _poly_divmod_fp(modulus, g, p)
            if not r:
                return False
    return True


def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """First monic irreducible of degree m over F_p, in lexicographic order."""
    if m == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=m):
        candidate = tuple(low) + (1,)
        if candidate[0] != 0 and _is_irreducible_fp(candidate, p):
            return candidate
    raise ValueError(f"no irreducible polynomial of degree {m} over F_{p}")  # pragma: no cover


class GF:
    """The finite field F_{p^m} = F_p[t] / (modulus).

    Index-level operations (``add``, ``mul``, ...) act on integers in
    ``range(q)``; :meth:`element` wraps an index or coefficient vector in a
    :class:`FieldElement`.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree m={m} must be >= 1")
        self.p = p
        self.m = m
        self.q = p**m
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, m)) or find_irreducible(p, m)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1:
            raise ValueError(f"modulus must have length m+1={m + 1}, got {len(modulus)}")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if m > 1 and not _is_irreducible_fp(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        coeffs = [self.coeffs(a) for a in range(q)]
        self._add = [
            [self.from_coeffs([(x + y) % p for x, y in zip(coeffs[a], coeffs[b])]) for b in range(q)]
            for a in range(q)
        ]
        self._neg = [self.from_coeffs([(-x) % p for x in coeffs[a]]) for a in range(q)]
        mul = []
        for a in range(q):
            row = []
            for b in range(q):
                prod = _poly_mul_fp(coeffs[a], coeffs[b], p)
                _, r = _poly_divmod_fp(prod, self.modulus, p)
                row.append(self.from_coeffs(r))
            mul.append(row)
        self._mul = mul
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = inv
        # Frobenius table: frob[s][a] = a^(p^s).
        frob = [list(range(q))]
        for _ in range(1, m):
            prev = frob[-1]
            frob.append([self.pow(prev[a], p) for a in range(q)])
        if m > 1:
            # One more p-th power must close the cycle back to the identity.
            closure = [self.pow(frob[-1][a], p) for a in range(q)]
            assert closure == frob[0], "Frobenius does not have order dividing m"
        self._frob = frob

    # -- index-level arithmetic -------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._inv[a]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def frobenius(self, a: int, s: int) -> int:
        """a^(p^s); s is reduced modulo m, so every integer exponent is legal."""
        return self._frob[s % self.m][a]

    # -- encoding helpers --------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        cs = []
        for _ in range(self.m):
            a, c = divmod(a, self.p)
            cs.append(c)
        return tuple(cs)

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.m and any(cs[self.m :]):
            raise ValueError(f"coefficient vector longer than m={self.m}")
        idx = 0
        for c in reversed(cs[: self.m]):
            idx = idx * self.p + c
        return idx

    def element(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        """Wrap a constant (int, reduced mod p) or coefficient vector."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return FieldElement(self, self.from_coeffs(value))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in range(self.q)]

    @cached_property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @cached_property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def sort_key(self, a: int) -> tuple[int, ...]:
        """Canonical ordering key: the coefficient vector, constant term first."""
        return self.coeffs(a)

    def format_idx(self, a: int) -> str:
        if self.m == 1:
            return str(a)
        return "[" + ",".join(str(c) for c in self.coeffs(a)) + "]"

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`GF`, comparable and hashable by value."""

    field: GF
    idx: int

    def _coerce(self, other: FieldElement) -> FieldElement:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field != self.field:
            raise ValueError("mismatched field parameters")
        return other

    def __add__(self, other: FieldElement) -> FieldElement:
        other = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.idx, other.idx))

    def __sub__(self, other: FieldElement) -> FieldElement:
        other = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.idx, other.idx))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.idx))

    def __mul__(self, other: FieldElement) -> FieldElement:
        other = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.idx, other.idx))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.idx))

    def __pow__(self, k: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.idx, k))

    def frobenius(self, s: int) -> FieldElement:
        return FieldElement(self.field, self.field.frobenius(self.idx, s))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.idx)

    @property
    def sort_key(self) -> tuple[int, ...]:
        return self.field.sort_key(self.idx)

    def __bool__(self) -> bool:
        return self.idx != 0

    def __str__(self) -> str:
        return self.field.format_idx(self.idx)

    def __repr__(self) -> str:
        return f"{self.field!r}:{self}"
