"""Skew constacyclic codes over the chain ring F_{p^m} + u*F_{p^m}.

The quotient R[x; Theta] / <x^n - lambda> (lambda a unit fixed by Theta, n a
multiple of the order of Theta) carries the codes of length n closed under
the twisted constacyclic shift.  This package provides exact arithmetic for
the ring and its skew polynomials, the complete three-type classification of
the left ideals, closed-form Euclidean and Hermitian dual generators, and
brute-force oracles everything is checked against.
"""

from .gf import GF, FieldElement
from .chainring import ChainRing, RingAutomorphism, RingElement, enumerate_automorphisms
from .skewpoly import NEG_INF, SkewPolyRing
from .quotcode import BoundExceededError, CodeContext, CodeSpan
from .classify import (
    CanonicalIdeal,
    IdealType,
    canonicalize,
    enumerate_ideal_records,
    enumerate_ideals,
    ideal_lattice,
    monic_right_divisors,
)
from .duality import (
    InnerProduct,
    brute_dual,
    compute_m,
    dual_ideal,
    euclidean_dual_ideal,
    euclidean_dual_li1,
    hermitian_dual_ideal,
    hermitian_dual_li1,
    inner,
    is_self_dual_ideal,
    is_self_dual_li1,
)
from .parsing import ParseError, parse_poly, parse_ring_element, poly_str

__version__ = "0.1.0"

__all__ = [
    "GF",
    "FieldElement",
    "ChainRing",
    "RingAutomorphism",
    "RingElement",
    "enumerate_automorphisms",
    "NEG_INF",
    "SkewPolyRing",
    "BoundExceededError",
    "CodeContext",
    "CodeSpan",
    "CanonicalIdeal",
    "IdealType",
    "canonicalize",
    "enumerate_ideal_records",
    "enumerate_ideals",
    "ideal_lattice",
    "monic_right_divisors",
    "InnerProduct",
    "brute_dual",
    "compute_m",
    "dual_ideal",
    "euclidean_dual_ideal",
    "euclidean_dual_li1",
    "hermitian_dual_ideal",
    "hermitian_dual_li1",
    "inner",
    "is_self_dual_ideal",
    "is_self_dual_li1",
    "ParseError",
    "parse_poly",
    "parse_ring_element",
    "poly_str",
    "__version__",
]
