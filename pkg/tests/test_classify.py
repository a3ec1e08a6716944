import itertools

import pytest

from skewcodes import BoundExceededError, CodeContext
from skewcodes.classify import (
    CanonicalIdeal,
    IdealType,
    canonicalize,
    dot_lattice,
    enumerate_ideal_records,
    enumerate_ideals,
    ideal_lattice,
    json_listing,
    monic_right_divisors,
)
from skewcodes.parsing import parse_poly


def test_monic_right_divisors_residue(comm_ctx):
    sk = comm_ctx.skew
    divisors = monic_right_divisors(comm_ctx.modulus_poly, 2, comm_ctx, residue_only=True)
    assert divisors == [
        sk.one,
        parse_poly("x+1", sk),
        parse_poly("x+2", sk),
        parse_poly("x^2+2", sk),
    ]


def test_monic_right_divisors_skew_degree_one(skew_ctx):
    sk = skew_ctx.skew
    divisors = [
        g for g in monic_right_divisors(skew_ctx.modulus_poly, 1, skew_ctx) if len(g) == 2
    ]
    expected = {
        parse_poly(t, sk)
        for t in ("x+1", "x+2", "x+1+u", "x+1+2*u", "x+2+u", "x+2+2*u")
    }
    assert set(divisors) == expected


def test_monic_right_divisors_max_deg_zero(skew_ctx):
    assert monic_right_divisors(skew_ctx.modulus_poly, 0, skew_ctx) == [skew_ctx.skew.one]


def test_monic_right_divisors_bound(skew_ctx, r3, theta2):
    tight = CodeContext(r3, theta2, 2, r3.one, max_bruteforce=5)
    with pytest.raises(BoundExceededError):
        monic_right_divisors(tight.modulus_poly, 2, tight)


def test_canonicalize_examples(skew_ctx):
    sk = skew_ctx.skew
    u = sk.constant(skew_ctx.ring.u_idx)

    ideal = canonicalize(skew_ctx.span_from_generators([parse_poly("x+1+u", sk)]), skew_ctx)
    assert ideal.kind is IdealType.LI1
    assert ideal.g == parse_poly("x+1+u", sk)

    ideal2 = canonicalize(skew_ctx.span_from_generators([u]), skew_ctx)
    assert ideal2.kind is IdealType.LI2
    assert ideal2.g1 == sk.one

    ideal3 = canonicalize(skew_ctx.span_from_generators([u, parse_poly("x+1", sk)]), skew_ctx)
    assert ideal3 == CanonicalIdeal(
        IdealType.LI3, g1=sk.one, f0=parse_poly("x+1", sk), f1=sk.zero
    )


def test_canonicalize_zero_and_full(skew_ctx):
    sk = skew_ctx.skew
    zero = canonicalize(skew_ctx.span_from_generators([sk.zero]), skew_ctx)
    assert zero.kind is IdealType.LI1 and zero.g == skew_ctx.modulus_poly
    assert zero.is_zero(skew_ctx) and zero.label(skew_ctx) == "0"
    full = canonicalize(skew_ctx.span_from_generators([sk.constant(2)]), skew_ctx)
    assert full.g == sk.one


def test_canonicalize_rejects_non_ideal(skew_ctx):
    from skewcodes.quotcode import CodeSpan

    bad = CodeSpan(frozenset({skew_ctx.zero_word, skew_ctx.word([1, 0])}))
    with pytest.raises(ValueError, match="left ideal"):
        canonicalize(bad, skew_ctx)


def test_canonical_data_is_independent_of_generator_presentation(skew_ctx):
    # scalar multiples and shifted generators present the same span, so they
    # must canonicalize identically
    sk = skew_ctx.skew
    g = parse_poly("x+1+u", sk)
    base = canonicalize(skew_ctx.span_from_generators([g]), skew_ctx)
    for c in (2, skew_ctx.ring.pack(1, 1), skew_ctx.ring.pack(2, 2)):
        other = canonicalize(
            skew_ctx.span_from_generators([sk.const_mul(c, g)]), skew_ctx
        )
        assert other == base


def test_enumerate_commutative_nine(comm_ctx):
    labels = {(i.label(comm_ctx), i.kind.subscript) for i in enumerate_ideals(comm_ctx)}
    assert labels == {
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


def test_enumerate_skew_thirteen(skew_ctx, comm_ctx):
    skew_labels = {i.label(skew_ctx) for i in enumerate_ideals(skew_ctx)}
    comm_labels = {i.label(comm_ctx) for i in enumerate_ideals(comm_ctx)}
    assert len(skew_labels) == 13
    assert comm_labels < skew_labels
    assert skew_labels - comm_labels == {"x+1+u", "x+1+2u", "x+2+u", "x+2+2u"}


def test_enumeration_is_complete_over_singletons_and_pairs(skew_ctx):
    # every principal and two-generator ideal of the quotient appears
    known = {rec.span.words for rec in enumerate_ideal_records(skew_ctx)}
    polys = [skew_ctx.poly_from_word(w) for w in skew_ctx.all_words]
    for f in polys:
        assert skew_ctx.span_from_generators([f]).words in known
    for f, g in itertools.product(polys, repeat=2):
        assert skew_ctx.span_from_generators([f, g]).words in known


def test_enumerated_spans_are_left_ideals(skew_ctx, f4_ctx):
    for ctx in (skew_ctx, f4_ctx):
        for rec in enumerate_ideal_records(ctx):
            assert rec.span.is_left_ideal(ctx)


def test_minimal_member_uniqueness(skew_ctx):
    # within each span the monic minimal member (or the u-led one) is unique
    sk = skew_ctx.skew
    ring = skew_ctx.ring
    for rec in enumerate_ideal_records(skew_ctx):
        polys = [skew_ctx.poly_from_word(w) for w in rec.span.words if any(w)]
        if not polys:
            continue
        dmin = min(len(f) for f in polys)
        minimal = [f for f in polys if len(f) == dmin]
        monic = [f for f in minimal if f[-1] == ring.one_idx]
        u_led = [f for f in minimal if f[-1] == ring.u_idx]
        assert len(monic) <= 1
        assert len(u_led) <= 1


def test_cardinality_formulas(skew_ctx, f4_ctx):
    for ctx in (skew_ctx, f4_ctx):
        for rec in enumerate_ideal_records(ctx):
            assert rec.ideal.cardinality(ctx) == len(rec.span)


def test_lattice_cover_examples(skew_ctx):
    ideals = enumerate_ideals(skew_ctx)
    edges = ideal_lattice(ideals, skew_ctx)
    by_label = {ideals[i].label(skew_ctx): i for i in range(len(ideals))}
    covers = {
        (ideals[i].label(skew_ctx), ideals[j].label(skew_ctx)) for i, j in edges
    }
    assert {c for p, c in covers if p == "u,x+1"} == {"x+1+2u", "x+1+u", "x+1", "u"}
    assert {c for p, c in covers if p == "1"} == {"u,x+1", "u,x+2"}
    assert {p for p, c in covers if c == "0"} == {"u(x+1)", "u(x+2)"}


def test_lattice_sanity(skew_ctx, comm_ctx):
    for ctx in (skew_ctx, comm_ctx):
        records = enumerate_ideal_records(ctx)
        spans = [rec.span.words for rec in records]
        smallest = min(spans, key=len)
        largest = max(spans, key=len)
        assert len(smallest) == 1
        assert len(largest) == ctx.ring.size**ctx.n
        for words in spans:
            assert smallest <= words <= largest


def test_dot_output(skew_ctx):
    ideals = enumerate_ideals(skew_ctx)
    edges = ideal_lattice(ideals, skew_ctx)
    dot = dot_lattice(ideals, edges, skew_ctx)
    assert dot.startswith("digraph")
    assert '[label="<u(x+1)>_2"]' in dot
    assert dot.count("->") == len(edges)


def test_json_listing(skew_ctx):
    listing = json_listing(enumerate_ideals(skew_ctx), skew_ctx)
    assert len(listing) == 13
    full = next(item for item in listing if item["label"] == "1")
    assert full == {
        "type": "LI1",
        "label": "1",
        "generators": ["1"],
        "cardinality": 81,
    }
    two_gen = next(item for item in listing if item["label"] == "u,x+1")
    assert two_gen["type"] == "LI3"
    assert two_gen["generators"] == ["u", "x + 1"]
    assert two_gen["cardinality"] == 27


def test_enumeration_refuses_oversized_context(r3, theta2):
    tight = CodeContext(r3, theta2, 2, r3.one, max_bruteforce=50)
    with pytest.raises(BoundExceededError):
        enumerate_ideals(tight)
