import itertools
import random

import pytest

from skewcodes import GF, ChainRing, NEG_INF, RingAutomorphism, SkewPolyRing
from skewcodes.parsing import parse_poly

import oracles


@pytest.fixture(scope="module")
def sk3(r3, theta2):
    return SkewPolyRing(r3, theta2)


def rand_poly(sk, rng, max_deg, unit_lead=False):
    deg = rng.randrange(max_deg + 1)
    coeffs = [rng.randrange(sk.ring.size) for _ in range(deg + 1)]
    if unit_lead:
        units = sk.ring.unit_indices()
        coeffs[-1] = units[rng.randrange(len(units))]
    return sk.poly(coeffs)


def test_twist_rule(sk3, r3, theta2):
    # x * u = 2u * x
    assert sk3.mul(sk3.x, sk3.constant(r3.u_idx)) == sk3.poly([0, r3.pack(0, 2)])
    for a in r3.element_indices():
        assert sk3.mul(sk3.x, sk3.constant(a)) == sk3.mul(sk3.constant(theta2(a)), sk3.x)


def test_cube_factorizations(sk3):
    # both factorizations of x^6 - 1 under the order-2 twist
    xp1 = parse_poly("x+1", sk3)
    xp2 = parse_poly("x+2", sk3)
    quad = parse_poly("x^2+u*x+2", sk3)
    target = parse_poly("x^6-1", sk3)
    assert sk3.mul(sk3.pow(xp1, 3), sk3.pow(xp2, 3)) == target
    assert sk3.pow(quad, 3) == target


def test_mul_matches_naive_oracle_exhaustive(sk3):
    polys = [sk3.poly(c) for c in itertools.product(range(9), repeat=2)]
    for f, g in itertools.product(polys, repeat=2):
        assert sk3.mul(f, g) == oracles.naive_skew_mul(sk3, f, g)


def test_mul_matches_naive_oracle_random(sk3):
    rng = random.Random(7)
    for _ in range(500):
        f = rand_poly(sk3, rng, 4)
        g = rand_poly(sk3, rng, 4)
        assert sk3.mul(f, g) == oracles.naive_skew_mul(sk3, f, g)


def test_degree_and_zero(sk3):
    assert sk3.degree(sk3.zero) == NEG_INF
    assert NEG_INF < 0
    assert sk3.degree(sk3.one) == 0
    assert sk3.add(sk3.one, sk3.poly([2])) == sk3.zero  # 1 + 2 = 0


def test_right_divmod_examples(sk3):
    target = parse_poly("x^6-1", sk3)
    quad = parse_poly("x^2+u*x+2", sk3)
    q, r = sk3.right_divmod(target, quad)
    assert r == sk3.zero
    assert q == sk3.pow(quad, 2)
    assert sk3.mul(q, quad) == target

    f = parse_poly("x^2+u*x+2", sk3)
    assert sk3.right_divmod(f, f) == (sk3.one, sk3.zero)

    small = parse_poly("x+1", sk3)
    assert sk3.right_divmod(small, quad) == (sk3.zero, small)


def test_left_divmod_examples(sk3):
    target = parse_poly("x^6-1", sk3)
    quad = parse_poly("x^2+u*x+2", sk3)
    q, r = sk3.left_divmod(target, quad)
    assert r == sk3.zero
    assert sk3.mul(quad, q) == target
    assert sk3.left_divmod(quad, quad) == (sk3.one, sk3.zero)
    assert sk3.left_divmod(sk3.zero, quad) == (sk3.zero, sk3.zero)


def test_division_requires_unit_lead(sk3, r3):
    g = sk3.poly([1, r3.u_idx])  # leading coefficient u
    with pytest.raises(ValueError, match="unit leading"):
        sk3.right_divmod(sk3.x, g)
    with pytest.raises(ValueError, match="unit leading"):
        sk3.left_divmod(sk3.x, g)
    with pytest.raises(ZeroDivisionError):
        sk3.right_divmod(sk3.x, sk3.zero)


def test_is_right_divisor_examples(sk3):
    x2m1 = parse_poly("x^2-1", sk3)
    assert sk3.is_right_divisor(parse_poly("x+1", sk3), x2m1)
    assert sk3.is_right_divisor(parse_poly("x^2+u*x+2", sk3), parse_poly("x^6-1", sk3))
    assert not sk3.is_right_divisor(parse_poly("x+u", sk3), x2m1)


def test_right_quotient_examples(sk3):
    x2m1 = parse_poly("x^2-1", sk3)
    q = sk3.right_quotient(x2m1, parse_poly("x+1", sk3))
    assert q == parse_poly("x+2", sk3)
    assert sk3.mul(q, parse_poly("x+1", sk3)) == x2m1
    assert sk3.right_quotient(x2m1, x2m1) == sk3.one
    with pytest.raises(ValueError, match="remainder"):
        sk3.right_quotient(x2m1, parse_poly("x+u", sk3))


def test_division_round_trip_random(sk3):
    rng = random.Random(20240)
    for _ in range(2000):
        f = rand_poly(sk3, rng, 6)
        g = rand_poly(sk3, rng, 3, unit_lead=True)
        q, r = sk3.right_divmod(f, g)
        assert sk3.add(sk3.mul(q, g), r) == f
        assert r == sk3.zero or sk3.degree(r) < sk3.degree(g)
        lq, lr = sk3.left_divmod(f, g)
        assert sk3.add(sk3.mul(g, lq), lr) == f
        assert lr == sk3.zero or sk3.degree(lr) < sk3.degree(g)


def test_is_central_examples(sk3, r3):
    assert sk3.is_central(parse_poly("x^2-1", sk3))
    assert not sk3.is_central(parse_poly("x-1", sk3))
    identity_ring = SkewPolyRing(r3, RingAutomorphism(r3, 0, 1))
    rng = random.Random(5)
    for _ in range(20):
        assert identity_ring.is_central(rand_poly(identity_ring, rng, 4))


def test_centrality_criterion_grid(r3):
    # x^n - lambda is central exactly when ord(Theta) | n and Theta fixes lambda
    for beta in (1, 2):
        auto = RingAutomorphism(r3, 0, beta)
        sk = SkewPolyRing(r3, auto)
        for n in range(1, 7):
            for lam in r3.unit_indices():
                poly = sk.add(sk.x_power(n), sk.constant(r3.neg(lam)))
                expected = n % auto.order == 0 and auto.fixes(lam)
                assert sk.is_central(poly) == expected


def test_commuting_quotient_for_central_target(sk3):
    # right divisors of the monic central x^6 - 1 commute with their cofactors
    target = parse_poly("x^6-1", sk3)
    found = 0
    for coeffs in itertools.product(range(9), repeat=2):
        g = sk3.poly(list(coeffs) + [1])
        q, r = sk3.right_divmod(target, g)
        if r == sk3.zero:
            found += 1
            assert sk3.mul(q, g) == target == sk3.mul(g, q)
    assert found > 0


def test_reversal_examples(sk3):
    assert sk3.reversal(parse_poly("x+2", sk3), 1) == parse_poly("2*x+1", sk3)
    assert sk3.reversal(sk3.one, 0) == sk3.one
    for k in range(4):
        assert sk3.reversal(sk3.x_power(k), k) == sk3.one
    with pytest.raises(ValueError, match="deg"):
        sk3.reversal(parse_poly("x^2+1", sk3), 1)


def test_reversal_involution(sk3):
    rng = random.Random(11)
    for _ in range(300):
        d = rng.randrange(1, 6)
        w = rand_poly(sk3, rng, d)
        assert sk3.reversal(sk3.reversal(w, d), d) == sk3.theta_power(w, d)
        if d % sk3.auto.order == 0:
            assert sk3.reversal(sk3.reversal(w, d), d) == w


def test_coeff_theta_examples(sk3):
    assert sk3.coeff_theta(parse_poly("2*x+1", sk3)) == parse_poly("2*x+1", sk3)
    assert sk3.coeff_theta(parse_poly("u*x+1", sk3)) == parse_poly("2*u*x+1", sk3)
    rng = random.Random(13)
    for _ in range(100):
        f = rand_poly(sk3, rng, 5)
        assert sk3.coeff_theta(sk3.coeff_theta(f)) == f  # order-2 twist


def test_coeff_theta_is_ring_map(sk3):
    rng = random.Random(17)
    for _ in range(200):
        f = rand_poly(sk3, rng, 4)
        g = rand_poly(sk3, rng, 4)
        assert sk3.coeff_theta(sk3.mul(f, g)) == sk3.mul(sk3.coeff_theta(f), sk3.coeff_theta(g))


def test_theta_power_examples(sk3, r3):
    f = parse_poly("u*x", sk3)
    assert sk3.theta_power(f, 0) == f
    assert sk3.theta_power(f, 1) == parse_poly("2*u*x", sk3)
    assert sk3.theta_power(f, sk3.auto.order) == f
    # x^j f = theta_power(f, j) x^j
    rng = random.Random(19)
    for _ in range(100):
        g = rand_poly(sk3, rng, 4)
        j = rng.randrange(4)
        assert sk3.mul(sk3.x_power(j), g) == sk3.mul(sk3.theta_power(g, j), sk3.x_power(j))


def test_shift_through_u_examples(sk3, r3):
    assert sk3.shift_through_u(sk3.x) == parse_poly("2*x", sk3)
    assert sk3.shift_through_u(sk3.constant(2)) == sk3.constant(2)
    assert sk3.shift_through_u(sk3.x_power(2)) == sk3.x_power(2)
    assert sk3.shift_u_through(sk3.x) == parse_poly("2*x", sk3)
    assert sk3.shift_u_through(sk3.constant(r3.element(2, 1).idx)) == sk3.constant(2)


def test_shift_identities_exhaustive(sk3, r3):
    u = sk3.constant(r3.u_idx)
    for coeffs in itertools.product(range(9), repeat=4):
        f = sk3.poly(coeffs)
        left = sk3.shift_through_u(f)
        assert sk3.mul(f, u) == sk3.mul(u, left)
        assert sk3.is_residue(left)
        right = sk3.shift_u_through(f)
        assert sk3.mul(u, f) == sk3.mul(right, u)
        assert sk3.is_residue(right)


def test_identity_twist_shifts(r3):
    sk = SkewPolyRing(r3, RingAutomorphism(r3, 0, 1))
    rng = random.Random(23)
    for _ in range(50):
        f = rand_poly(sk, rng, 4)
        assert sk.shift_through_u(f) == sk.bar_poly(f)
        assert sk.shift_u_through(f) == sk.bar_poly(f)


def test_ring_axioms_random(sk3):
    rng = random.Random(101)
    for _ in range(2000):
        f = rand_poly(sk3, rng, 3)
        g = rand_poly(sk3, rng, 3)
        h = rand_poly(sk3, rng, 3)
        assert sk3.mul(sk3.mul(f, g), h) == sk3.mul(f, sk3.mul(g, h))
        assert sk3.mul(f, sk3.add(g, h)) == sk3.add(sk3.mul(f, g), sk3.mul(f, h))
        assert sk3.mul(sk3.add(f, g), h) == sk3.add(sk3.mul(f, h), sk3.mul(g, h))


def test_bar_is_ring_epimorphism(sk3):
    rng = random.Random(29)
    for _ in range(300):
        f = rand_poly(sk3, rng, 4)
        g = rand_poly(sk3, rng, 4)
        assert sk3.bar_poly(sk3.mul(f, g)) == sk3.mul(sk3.bar_poly(f), sk3.bar_poly(g))


def test_deg_of_products(sk3, r3):
    # deg(f g) <= deg f + deg g, equality with a unit leading coefficient
    rng = random.Random(31)
    for _ in range(300):
        f = rand_poly(sk3, rng, 3)
        g = rand_poly(sk3, rng, 3, unit_lead=True)
        if f == sk3.zero:
            continue
        assert sk3.degree(sk3.mul(f, g)) == sk3.degree(f) + sk3.degree(g)
    zero_divisor = sk3.poly([r3.u_idx])
    assert sk3.degree(sk3.mul(zero_divisor, zero_divisor)) == NEG_INF


def test_monic_scale(sk3):
    f = parse_poly("2*x+1", sk3)
    assert sk3.monic_scale(f) == parse_poly("x+2", sk3)
    with pytest.raises(ValueError):
        sk3.monic_scale(sk3.zero)
