"""Polynomial substrate: parsing, arithmetic, gcd, degrees."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import random_form, random_poly
from presmat.ring import (
    NEG_INF,
    ParseError,
    Polynomial,
    RingContext,
    embed,
    exact_div,
    gcd,
    parse,
)

XYZ = RingContext(["x", "y", "z"])


def test_parse_two_terms():
    p = parse("x*y - 2*z^2", XYZ)
    assert p.terms == {(1, 1, 0): Fraction(1), (0, 0, 2): Fraction(-2)}


def test_parse_zero():
    assert parse("0", XYZ).terms == {}
    assert parse("0", XYZ).is_zero()


def test_parse_closing_remark_monomial():
    names = (["x1", "x2", "x3"]
             + [f"y{i}" for i in range(1, 6)]
             + [f"z{i}" for i in range(1, 9)])
    ring = RingContext(names)
    p = parse("-x3*y4*y5*z4*z5", ring)
    assert len(p.terms) == 1
    (mono, coeff), = p.terms.items()
    assert coeff == Fraction(-1)
    assert sum(mono) == 5
    assert mono[ring.index("x3")] == 1
    assert mono[ring.index("y4")] == mono[ring.index("y5")] == 1
    assert mono[ring.index("z4")] == mono[ring.index("z5")] == 1


def test_parse_rational_literal_and_whitespace():
    assert parse("3/2*x", XYZ) == parse("  3 / 2 * x ", XYZ)
    assert parse("3/2", XYZ).constant_term() == Fraction(3, 2)


def test_parse_precedence():
    # ^ binds tighter than *, which binds tighter than +/-
    assert parse("2*x^2", XYZ) == XYZ.monomial((2, 0, 0), 2)
    assert parse("-x^2", XYZ) == -XYZ.monomial((2, 0, 0))
    assert parse("x+y*z", XYZ) == XYZ.variable("x") + XYZ.variable("y") * XYZ.variable("z")
    assert parse("(x+y)*z", XYZ) == (XYZ.variable("x") + XYZ.variable("y")) * XYZ.variable("z")


def test_parse_juxtaposition_is_not_multiplication():
    with pytest.raises(ParseError):
        parse("xy", XYZ)  # unknown identifier, not x*y


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse("x + * y", XYZ)
    assert info.value.position == 4
    with pytest.raises(ParseError) as info:
        parse("x + w", XYZ)
    assert info.value.position == 4
    with pytest.raises(ParseError):
        parse("x^y", XYZ)
    with pytest.raises(ParseError):
        parse("3/0", XYZ)
    with pytest.raises(ParseError):
        parse("x +", XYZ)


def test_difference_of_squares():
    x, y = XYZ.variable("x"), XYZ.variable("y")
    assert (x + y) * (x - y) == parse("x^2 - y^2", XYZ)


def test_additive_identity():
    p = parse("x*y - 2*z^2 + 1/3", XYZ)
    assert p + XYZ.zero() == p
    assert p + 0 == p


def test_triple_product_expansion():
    # h1*g2*g3 with h1=x, g2=v, g3=w; oracle: direct single-term expansion
    ring = RingContext(["x", "y", "z", "u", "v", "w"])
    prod = ring.variable("x") * ring.variable("v") * ring.variable("w")
    expected = ring.monomial((1, 0, 0, 0, 1, 1))
    assert prod == expected


def test_gcd_monomials():
    assert gcd(parse("x^2*y", XYZ), parse("x*y^2", XYZ)) == parse("x*y", XYZ)


def _resultant_linear_in(p: Polynomial, q: Polynomial, var: str):
    """Sylvester resultant for polynomials of degree 1 in `var`."""
    ring = p.ring
    i = ring.index(var)

    def split(f):
        one = {m: c for m, c in f.terms.items() if m[i] == 1}
        zero = {m: c for m, c in f.terms.items() if m[i] == 0}
        assert len(one) + len(zero) == len(f.terms), "degree > 1 in main variable"
        drop = lambda m: m[:i] + (0,) + m[i + 1:]
        return (Polynomial(ring, {drop(m): c for m, c in one.items()}),
                Polynomial(ring, zero))

    a1, a0 = split(p)
    b1, b0 = split(q)
    return a1 * b0 - a0 * b1


def test_gcd_coprime_linear_forms():
    # oracle: resultants in x and in y are both nonzero, so the gcd is constant
    p, q = parse("x+y", XYZ), parse("x-y", XYZ)
    assert not _resultant_linear_in(p, q, "x").is_zero()
    assert not _resultant_linear_in(p, q, "y").is_zero()
    assert gcd(p, q) == XYZ.one()


def test_gcd_shared_factor():
    # oracle: build both inputs from known factorizations, common part = x+y
    x, y = XYZ.variable("x"), XYZ.variable("y")
    p = (x - y) * (x + y)
    q = (x + y) * (x + y)
    assert p == parse("x^2-y^2", XYZ) and q == parse("x^2+2*x*y+y^2", XYZ)
    assert gcd(p, q) == x + y


def test_gcd_zero_conventions():
    p = parse("2*x + 2*y", XYZ)
    assert gcd(p, XYZ.zero()) == parse("x + y", XYZ)  # monic normalization
    assert gcd(XYZ.zero(), p) == parse("x + y", XYZ)
    assert gcd(XYZ.zero(), XYZ.zero()).is_zero()


def test_gcd_normalized_leading_coefficient():
    p = parse("4*x^2 - 4*y^2", XYZ)
    q = parse("6*x^2 + 12*x*y + 6*y^2", XYZ)
    g = gcd(p, q)
    assert g.lead_coeff() == 1 and g == parse("x+y", XYZ)


def test_degree_and_sentinel():
    assert parse("x*v*w", RingContext(["x", "v", "w"])).degree() == 3
    assert XYZ.zero().degree() == NEG_INF
    assert NEG_INF < 0
    assert XYZ.one().degree() == 0


def test_is_homogeneous():
    assert parse("x^2 + y*z", XYZ).is_homogeneous()
    assert not parse("x + y*z", XYZ).is_homogeneous()
    assert XYZ.zero().is_homogeneous()


def test_constant_term():
    assert parse("3/2 + x", XYZ).constant_term() == Fraction(3, 2)
    assert parse("x", XYZ).constant_term() == 0


def test_exact_div():
    x, y = XYZ.variable("x"), XYZ.variable("y")
    p = (x + y) * (x - y) * (x + 2 * y)
    assert exact_div(p, x + y) == (x - y) * (x + 2 * y)
    with pytest.raises(ValueError):
        exact_div(x + y, x - y)


def test_embed():
    small = RingContext(["x", "z"])
    big = RingContext(["x", "y", "z", "t"])
    p = parse("x^2 - 3*z", small)
    assert embed(p, big) == parse("x^2 - 3*z", big)
    with pytest.raises(ValueError):
        embed(parse("x", big.extend(["q"])), small)


def test_mismatched_rings_rejected():
    other = RingContext(["x", "y", "z"], order="lex")
    with pytest.raises(ValueError):
        parse("x", XYZ) + parse("x", other)
    with pytest.raises(ValueError):
        gcd(parse("x", XYZ), parse("x", other))


# -- property suites ---------------------------------------------------------

def test_ring_axioms_randomized():
    rng = random.Random(1201)
    rings = [XYZ, RingContext(["a", "b"], order="lex"),
             RingContext(["x", "y", "z", "w"], order=("elim", 1))]
    for i in range(250):
        ring = rings[i % len(rings)]
        p = random_poly(rng, ring)
        q = random_poly(rng, ring)
        r = random_poly(rng, ring)
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + q == q + p
        assert p * q == q * p
        assert p - p == ring.zero()
        assert p * ring.one() == p


def test_render_parse_round_trip_randomized():
    rng = random.Random(1902)
    rings = [XYZ, RingContext(["alpha", "b2", "c_3"]),
             RingContext(["x", "y"], order="lex")]
    for i in range(250):
        ring = rings[i % len(rings)]
        p = random_poly(rng, ring, max_terms=6, max_deg=4)
        assert parse(str(p), ring) == p
    assert parse(str(XYZ.zero()), XYZ).is_zero()


def test_gcd_divides_randomized():
    rng = random.Random(77)
    for _ in range(60):
        nv = rng.randint(2, 3)
        ring = RingContext(["x", "y", "z"][:nv])
        g = random_form(rng, ring, rng.randint(1, 2), max_terms=2)
        p = g * random_poly(rng, ring, max_terms=2, max_deg=2, allow_zero=False)
        q = g * random_poly(rng, ring, max_terms=2, max_deg=2, allow_zero=False)
        d = gcd(p, q)
        assert exact_div(p, d) * d == p
        assert exact_div(q, d) * d == q
        # the planted common factor divides any common divisor of p and q
        assert exact_div(d, gcd(d, g)) is not None and gcd(d, g) == g.monic()


def test_homogeneous_product_degrees():
    rng = random.Random(4003)
    for _ in range(200):
        d, e = rng.randint(1, 3), rng.randint(1, 3)
        p = random_form(rng, XYZ, d)
        q = random_form(rng, XYZ, e)
        prod = p * q
        assert prod.is_homogeneous()
        assert prod.degree() == d + e


def test_pow_matches_repeated_multiplication():
    rng = random.Random(88)
    for _ in range(50):
        p = random_poly(rng, XYZ, max_terms=3, max_deg=2)
        n = rng.randint(0, 4)
        expected = XYZ.one()
        for _ in range(n):
            expected = expected * p
        assert p ** n == expected


def test_grevlex_order_on_variables():
    # x > y > z at equal degree, higher degree dominates
    x, y, z = (XYZ.variable(v) for v in "xyz")
    assert (x + y).lead_monomial() == (1, 0, 0)
    assert (y + z).lead_monomial() == (0, 1, 0)
    assert (x + y * z).lead_monomial() == (0, 1, 1)
    assert str(x + y + z) == "x + y + z"


def test_lex_order_difference():
    lex = RingContext(["x", "y", "z"], order="lex")
    p = parse("x + y^5", lex)
    assert p.lead_monomial() == (1, 0, 0)
    grv = parse("x + y^5", XYZ)
    assert grv.lead_monomial() == (0, 5, 0)


def test_elimination_block_order():
    ring = RingContext(["t", "x", "y"], order=("elim", 1))
    # any monomial containing t beats any t-free monomial
    p = parse("t + x^4*y^4", ring)
    assert p.lead_monomial() == (1, 0, 0)
