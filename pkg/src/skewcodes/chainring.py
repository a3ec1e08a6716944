"""The finite chain ring R = F_q + u*F_q with u**2 = 0, and its automorphisms.

Ring elements a + b*u are encoded as integers ``a_idx + q * b_idx`` where the
parts are field indices.  An element is a unit exactly when its constant part
is nonzero; the unique maximal ideal is u*F_q.  Every ring automorphism has
the shape ``a + b*u  ->  theta(a) + beta * theta(b) * u`` for a field
automorphism theta (a Frobenius power) and a nonzero scalar beta, and
:func:`enumerate_automorphisms` lists all ``m * (q - 1)`` of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .gf import GF, FieldElement


class ChainRing:
    """R = F_q + u*F_q over a fixed :class:`GF`.  Index-level ops on ints."""

    def __init__(self, field: GF):
        self.field = field
        self.q = field.q
        self.size = field.q * field.q
        self.zero_idx = 0
        self.one_idx = self.pack(1, 0)
        self.u_idx = self.pack(0, 1)

    # -- encoding ------------------------------------------------------------

    def pack(self, a: int, b: int) -> int:
        return a + self.q * b

    def parts(self, x: int) -> tuple[int, int]:
        return x % self.q, x // self.q

    def bar(self, x: int) -> int:
        """Reduction modulo u: the constant part, a field index."""
        return x % self.q

    def embed(self, a: int) -> int:
        """A field element viewed inside R (zero u-part)."""
        return a

    # -- arithmetic ------------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        f = self.field
        xa, xb = self.parts(x)
        ya, yb = self.parts(y)
        return self.pack(f.add(xa, ya), f.add(xb, yb))

    def sub(self, x: int, y: int) -> int:
        f = self.field
        xa, xb = self.parts(x)
        ya, yb = self.parts(y)
        return self.pack(f.sub(xa, ya), f.sub(xb, yb))

    def neg(self, x: int) -> int:
        f = self.field
        a, b = self.parts(x)
        return self.pack(f.neg(a), f.neg(b))

    def mul(self, x: int, y: int) -> int:
        # (a + b u)(c + d u) = a c + (a d + b c) u, the u**2 term vanishes.
        f = self.field
        a, b = self.parts(x)
        c, d = self.parts(y)
        return self.pack(f.mul(a, c), f.add(f.mul(a, d), f.mul(b, c)))

    def is_unit(self, x: int) -> bool:
        return x % self.q != 0

    def inv(self, x: int) -> int:
        """(a + b u)^-1 = a^-1 - a^-2 b u; defined only for units."""
        if not self.is_unit(x):
            raise ValueError(f"{self.format_idx(x)} is not a unit in {self!r}")
        f = self.field
        a, b = self.parts(x)
        ai = f.inv(a)
        return self.pack(ai, f.neg(f.mul(f.mul(ai, ai), b)))

    # -- enumeration and helpers ----------------------------------------------

    def element_indices(self) -> range:
        return range(self.size)

    def unit_indices(self) -> list[int]:
        return [x for x in range(self.size) if self.is_unit(x)]

    def elements(self) -> list[RingElement]:
        return [RingElement(self, x) for x in range(self.size)]

    def units(self) -> list[RingElement]:
        return [RingElement(self, x) for x in self.unit_indices()]

    @cached_property
    def add_table(self) -> list[list[int]]:
        return [[self.add(x, y) for y in range(self.size)] for x in range(self.size)]

    @cached_property
    def mul_table(self) -> list[list[int]]:
        return [[self.mul(x, y) for y in range(self.size)] for x in range(self.size)]

    def sort_key(self, x: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        a, b = self.parts(x)
        return (self.field.sort_key(a), self.field.sort_key(b))

    def format_idx(self, x: int) -> str:
        f = self.field
        a, b = self.parts(x)
        if b == 0:
            return f.format_idx(a)
        upart = "u" if b == 1 else f"{f.format_idx(b)}*u"
        if a == 0:
            return upart
        return f"{f.format_idx(a)}+{upart}"

    def element(self, a: int | Sequence[int] | FieldElement = 0, b: int | Sequence[int] | FieldElement = 0) -> RingElement:
        """Build a + b*u from field values (ints reduced mod p, or vectors)."""
        ea = self.field.element(a)
        eb = self.field.element(b)
        return RingElement(self, self.pack(ea.idx, eb.idx))

    @cached_property
    def zero(self) -> RingElement:
        return RingElement(self, 0)

    @cached_property
    def one(self) -> RingElement:
        return RingElement(self, self.one_idx)

    @cached_property
    def u(self) -> RingElement:
        return RingElement(self, self.u_idx)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ChainRing) and other.field == self.field

    def __hash__(self) -> int:
        return hash(("ChainRing", self.field))

    def __repr__(self) -> str:
        base = f"F_{self.field.p}" if self.field.m == 1 else f"F_{self.field.p}^{self.field.m}"
        return f"{base}+u{base}"


@dataclass(frozen=True)
class RingElement:
    """An element a + b*u of a :class:`ChainRing`."""

    ring: ChainRing
    idx: int

    def _coerce(self, other: RingElement) -> RingElement:
        if not isinstance(other, RingElement):
            raise TypeError(f"cannot combine RingElement with {type(other).__name__}")
        if other.ring != self.ring:
            raise ValueError("mismatched ring parameters")
        return other

    def __add__(self, other: RingElement) -> RingElement:
        other = self._coerce(other)
        return RingElement(self.ring, self.ring.add(self.idx, other.idx))

    def __sub__(self, other: RingElement) -> RingElement:
        other = self._coerce(other)
        return RingElement(self.ring, self.ring.sub(self.idx, other.idx))

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, self.ring.neg(self.idx))

    def __mul__(self, other: RingElement) -> RingElement:
        other = self._coerce(other)
        return RingElement(self.ring, self.ring.mul(self.idx, other.idx))

    def inverse(self) -> RingElement:
        return RingElement(self.ring, self.ring.inv(self.idx))

    @property
    def a(self) -> FieldElement:
        return FieldElement(self.ring.field, self.ring.parts(self.idx)[0])

    @property
    def b(self) -> FieldElement:
        return FieldElement(self.ring.field, self.ring.parts(self.idx)[1])

    @property
    def is_unit(self) -> bool:
        return self.ring.is_unit(self.idx)

    def bar(self) -> FieldElement:
        return FieldElement(self.ring.field, self.ring.bar(self.idx))

    def __bool__(self) -> bool:
        return self.idx != 0

    def __str__(self) -> str:
        return self.ring.format_idx(self.idx)

    def __repr__(self) -> str:
        return f"{self.ring!r}:{self}"


class RingAutomorphism:
    """The automorphism a + b*u -> theta(a) + beta*theta(b)*u of R.

    ``theta`` is the s-th Frobenius power of the residue field and ``beta`` a
    nonzero field element.  The action is precomputed as a permutation of the
    ring indices; powers (including negative ones) reduce modulo the order.
    """

    def __init__(self, ring: ChainRing, s: int, beta: int | Sequence[int] | FieldElement):
        self.ring = ring
        self.s = s % ring.field.m
        self.beta = ring.field.element(beta)
        if self.beta.idx == 0:
            raise ValueError("beta must be a nonzero field element")
        f = ring.field
        q = ring.q
        table = []
        for x in range(ring.size):
            a, b = ring.parts(x)
            table.append(ring.pack(f.frobenius(a, self.s), f.mul(self.beta.idx, f.frobenius(b, self.s))))
        self.table = table
        self._power_tables: dict[int, list[int]] = {0: list(range(ring.size)), 1: table}
        self._nu_cycle: list[int] | None = None

    def __call__(self, x: int) -> int:
        return self.table[x]

    def apply(self, elem: RingElement) -> RingElement:
        if elem.ring != self.ring:
            raise ValueError("element belongs to a different ring")
        return RingElement(self.ring, self.table[elem.idx])

    @cached_property
    def order(self) -> int:
        """Least k >= 1 with the k-fold composition equal to the identity."""
        identity = list(range(self.ring.size))
        current = self.table
        k = 1
        while current != identity:
            current = [self.table[x] for x in current]
            k += 1
        return k

    def _table_for(self, j: int) -> list[int]:
        j %= self.order
        tbl = self._power_tables.get(j)
        if tbl is None:
            prev = self._table_for(j - 1)
            tbl = [self.table[x] for x in prev]
            self._power_tables[j] = tbl
        return tbl

    def pow_apply(self, x: int, j: int) -> int:
        """Apply the j-th power of the automorphism; j may be negative."""
        return self._table_for(j)[x]

    def theta_field(self, a: int, j: int = 1) -> int:
        """The induced residue-field automorphism theta^j."""
        return self.ring.field.frobenius(a, self.s * j)

    def nu(self, i: int) -> int:
        """Field index nu_i with Theta^i(u) = nu_i * u.

        nu_0 = 1 and nu_{i+1} = beta * theta(nu_i), so
        nu_i = beta * theta(beta) * ... * theta^{i-1}(beta).
        """
        if self._nu_cycle is None:
            f = self.ring.field
            cycle = [1]
            v = 1
            for _ in range(self.order):
                v = f.mul(self.beta.idx, f.frobenius(v, self.s))
                cycle.append(v)
            assert cycle[self.order] == 1
            self._nu_cycle = cycle[: self.order] if self.order > 0 else [1]
        return self._nu_cycle[i % self.order]

    def fixes(self, x: int) -> bool:
        return self.table[x] == x

    @property
    def is_identity(self) -> bool:
        return self.s == 0 and self.beta.idx == 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingAutomorphism)
            and other.ring == self.ring
            and other.s == self.s
            and other.beta.idx == self.beta.idx
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.s, self.beta.idx))

    def __repr__(self) -> str:
        theta = "id" if self.s == 0 else f"frob^{self.s}"
        return f"Theta[{theta},{self.beta}]"


def enumerate_automorphisms(ring: ChainRing) -> list[RingAutomorphism]:
    """All m*(q-1) automorphisms of R, ordered by (s, beta) lexicographically.

    beta runs in the canonical element order (coefficient vectors compared
    constant term first).
    """
    f = ring.field
    betas = sorted(range(1, f.q), key=f.sort_key)
    return [RingAutomorphism(ring, s, FieldElement(f, b)) for s in range(f.m) for b in betas]


def fixed_subring_membership(auto: RingAutomorphism, elem: RingElement | int) -> bool:
    """True when the element is fixed by the automorphism."""
    idx = elem.idx if isinstance(elem, RingElement) else elem
    return auto.fixes(idx)
