"""Text grammar for field elements, ring elements and skew polynomials.

A polynomial is a sum of signed terms; each term is::

    [<coef>] [*] [u] [*] [x [^ <exp>]]

where ``<coef>`` is an integer (reduced mod p; prime fields print as 0..p-1)
or a bracketed coefficient vector ``[c0,c1,...]`` for extension fields.
Examples: ``x^2 + u*x + 2``, ``x+1+2*u``, ``[0,1]*x + [1,2]``.  Terms with
the same exponent accumulate, so a mixed coefficient 1 + 2u on x is written
as the two terms ``x + 2*u*x``; the printer emits that same shape, which
makes print(parse(s)) idempotent.
"""

from __future__ import annotations

import re

from .chainring import ChainRing, RingElement
from .gf import GF
from .skewpoly import Poly, SkewPolyRing


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def _split_terms(text: str) -> list[tuple[int, str, int]]:
    """Split on top-level + and - into (sign, term, position) triples."""
    terms: list[tuple[int, str, int]] = []
    depth = 0
    sign = 1
    current: list[str] = []
    start = 0
    pending_sign = False
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError(text, i, "unbalanced ']'")
        if depth == 0 and ch in "+-":
            chunk = "".join(current).strip()
            if chunk:
                terms.append((sign, chunk, start))
                sign = 1
                current = []
            if ch == "-":
                sign = -sign
            pending_sign = True
            start = i + 1
        else:
            current.append(ch)
    if depth != 0:
        raise ParseError(text, len(text), "unbalanced '['")
    chunk = "".join(current).strip()
    if chunk:
        terms.append((sign, chunk, start))
    elif pending_sign:
        raise ParseError(text, len(text), "dangling operator")
    return terms


_FIELD_TOKEN = re.compile(r"(?:(?P<vec>\[[^\]]*\])|(?P<int>\d+))")


def parse_field_element(text: str, field: GF) -> int:
    """Parse a field element literal; returns the element index."""
    stripped = text.strip()
    neg = False
    while stripped[:1] in ("-", "+"):
        if stripped[0] == "-":
            neg = not neg
        stripped = stripped[1:].strip()
    m = _FIELD_TOKEN.fullmatch(stripped)
    if not m:
        raise ParseError(text, 0, "expected a field element (integer or [c0,c1,...])")
    if m.group("int") is not None:
        idx = field.from_coeffs((int(m.group("int")),))
    else:
        body = m.group("vec")[1:-1].strip()
        try:
            coeffs = [int(c) for c in body.split(",")] if body else []
        except ValueError:
            raise ParseError(text, 0, "malformed coefficient vector") from None
        if len(coeffs) > field.m:
            raise ParseError(text, 0, f"coefficient vector longer than m={field.m}")
        idx = field.from_coeffs(coeffs)
    return field.neg(idx) if neg else idx


_TERM_RE = re.compile(
    r"""
    (?:(?P<coef>\[[^\]]*\]|\d+)\s*\*?\s*)?     # optional field coefficient
    (?:(?P<u>u)\s*\*?\s*)?                     # optional u factor
    (?:(?P<x>x)(?:\s*\^\s*(?P<exp>\d+))?)?     # optional power of x
    """,
    re.VERBOSE,
)


def _parse_term(term: str, field: GF, full_text: str, pos: int) -> tuple[int, bool, int]:
    """Parse one term into (field coefficient index, has_u, exponent)."""
    m = _TERM_RE.fullmatch(term.strip())
    if not m or not (m.group("coef") or m.group("u") or m.group("x")):
        raise ParseError(full_text, pos, f"malformed term {term.strip()!r}")
    coef = parse_field_element(m.group("coef"), field) if m.group("coef") else 1
    has_u = m.group("u") is not None
    if m.group("x") is None:
        exp = 0
    elif m.group("exp") is None:
        exp = 1
    else:
        exp = int(m.group("exp"))
    return coef, has_u, exp


def parse_ring_element(text: str, ring: ChainRing) -> RingElement:
    """Parse a ring element such as ``2``, ``u``, ``2*u`` or ``1+2*u``."""
    terms = _split_terms(text)
    if not terms:
        raise ParseError(text, 0, "empty element")
    a_idx = 0
    b_idx = 0
    for sign, term, pos in terms:
        coef, has_u, exp = _parse_term(term, ring.field, text, pos)
        if exp != 0:
            raise ParseError(text, pos, "a ring element cannot contain x")
        if sign < 0:
            coef = ring.field.neg(coef)
        if has_u:
            b_idx = ring.field.add(b_idx, coef)
        else:
            a_idx = ring.field.add(a_idx, coef)
    return RingElement(ring, ring.pack(a_idx, b_idx))


def parse_poly(text: str, skew: SkewPolyRing) -> Poly:
    """Parse a skew polynomial; coefficients are reduced canonically."""
    ring = skew.ring
    terms = _split_terms(text)
    if not terms:
        raise ParseError(text, 0, "empty polynomial")
    pairs: list[tuple[int, int]] = []
    for sign, term, pos in terms:
        coef_field, has_u, exp = _parse_term(term, ring.field, text, pos)
        coef = ring.pack(0, coef_field) if has_u else ring.embed(coef_field)
        if sign < 0:
            coef = ring.neg(coef)
        pairs.append((exp, coef))
    return skew.from_pairs(pairs)


# -- printing -----------------------------------------------------------------


def _term_str(field_idx: int, with_u: bool, exp: int, ring: ChainRing, compact: bool) -> str:
    field = ring.field
    parts = []
    if field_idx != 1 or (not with_u and exp == 0):
        parts.append(field.format_idx(field_idx))
    if with_u:
        parts.append("u")
    if exp == 1:
        parts.append("x")
    elif exp > 1:
        parts.append(f"x^{exp}")
    return "".join(parts) if compact else "*".join(parts)


def poly_str(f: Poly, ring: ChainRing, compact: bool = False) -> str:
    """Canonical rendering, highest power first; mixed coefficients a + b*u
    split into separate terms so the output re-parses to the same value."""
    if not f:
        return "0"
    sep = "+" if compact else " + "
    terms = []
    for exp in range(len(f) - 1, -1, -1):
        a, b = ring.parts(f[exp])
        if a:
            terms.append(_term_str(a, False, exp, ring, compact))
        if b:
            terms.append(_term_str(b, True, exp, ring, compact))
    return sep.join(terms)


def compact_poly_str(f: Poly, ring: ChainRing) -> str:
    return poly_str(f, ring, compact=True)


def ring_element_str(x: int | RingElement, ring: ChainRing) -> str:
    idx = x.idx if isinstance(x, RingElement) else x
    return ring.format_idx(idx)
