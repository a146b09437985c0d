"""Groebner engine tests: bases, membership, invariants, syzygies, resolutions."""

import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from conftest import random_form, random_poly
from presmat import (
    Budget,
    BudgetExceeded,
    GradedResolution,
    IdealBasis,
    ModuleBasis,
    PolyMatrix,
    RingContext,
    UnitIdealError,
    dimension,
    groebner_basis,
    height,
    hilbert_function,
    ideal_contains,
    ideal_equal,
    intersect,
    member,
    member_with_cofactors,
    minimal_free_resolution,
    minimal_generators,
    minimalize,
    module_member,
    normal_form,
    parse,
    quotient,
    syzygies,
    vector_degree,
)

XYZ = RingContext(("x", "y", "z"))
XYZT = RingContext(("x", "y", "z", "t"))


def ideal(ring, *texts):
    return IdealBasis([parse(s, ring) for s in texts])


def combine(cofactors, generators, ring):
    total = ring.zero()
    for c, g in zip(cofactors, generators):
        total = total + c * g
    return total


# -- reduced bases -------------------------------------------------------------


def test_twisted_cubic_lex_basis():
    # oracle one: every basis element vanishes on the curve (a^3, a^2 b, a b^2, b^3)
    # oracle two: the lex leading terms, worked out by hand from the three
    # S-pairs (each reduces to zero, so the input is already a basis)
    ring = RingContext(("x", "y", "z", "w"), order="lex")
    I = ideal(ring, "x*z - y^2", "x*w - y*z", "y*w - z^2")
    G = groebner_basis(I)
    rng = random.Random(5)
    for _ in range(25):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        point = (a ** 3, a ** 2 * b, a * b ** 2, b ** 3)
        for g in G.generators:
            assert g.evaluate(point) == 0
    leads = sorted(str(ring.monomial(g.lead_monomial())) for g in G.generators)
    assert leads == ["x*w", "x*z", "y*w"]
    for f in I.generators:
        assert member(f, G)


def test_monomial_ideal_is_its_own_basis():
    I = ideal(XYZ, "x^2", "x*y", "y^3")
    G = groebner_basis(I)
    assert sorted(str(g) for g in G.generators) == ["x*y", "x^2", "y^3"]


def test_basis_is_reduced_and_monic():
    I = ideal(XYZ, "2*x^2 + y^2", "3*x*y + z^2", "y^3 - z^3")
    G = groebner_basis(I)
    lead_monos = [g.lead_monomial() for g in G.generators]
    for g in G.generators:
        assert g.lead_coeff() == 1
        for mono in g.terms:
            others = [m for m in lead_monos if m != g.lead_monomial()]
            assert not any(all(a <= b for a, b in zip(m, mono)) for m in others)


def test_basis_independent_of_generator_order():
    rng = random.Random(11)
    for _ in range(20):
        gens = [random_poly(rng, XYZ, max_terms=3, max_deg=3) for _ in range(3)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        shuffled = gens[:]
        rng.shuffle(shuffled)
        G1 = groebner_basis(IdealBasis(gens, ring=XYZ))
        G2 = groebner_basis(IdealBasis(shuffled, ring=XYZ))
        assert G1.generators == G2.generators


# -- normal forms and membership ----------------------------------------------


def test_normal_form_examples():
    I = ideal(XYZ, "x^2 + y", "z")
    assert normal_form(parse("x^2*z + y*z", XYZ), I).is_zero()
    r = normal_form(parse("x^3", XYZ), I)
    assert r == parse("-x*y", XYZ)
    assert normal_form(parse("y", XYZ), I) == parse("y", XYZ)


def test_normal_form_is_canonical():
    I = ideal(XYZ, "x^2 - y*z", "y^2 - x*z")
    G = groebner_basis(I)
    p = parse("x^3 + y^3 + z^3", XYZ)
    leads = [g.lead_monomial() for g in G.generators]
    r = normal_form(p, I)
    for mono in r.terms:
        assert not any(all(a <= b for a, b in zip(m, mono)) for m in leads)
    assert member(p - r, I)


def test_membership():
    I = ideal(XYZ, "x")
    assert member(parse("x*y", XYZ), I)
    assert not member(parse("y", XYZ), I)
    assert member(XYZ.zero(), I)


def test_cofactors_monomial_example():
    ring = RingContext(("x", "y", "z", "u", "v", "w"))
    I = ideal(ring, "x*v*w", "y*u*w", "z*u*v")
    p = parse("u*x*v*w", ring)
    c = member_with_cofactors(p, I)
    assert [str(q) for q in c] == ["u", "0", "0"]


def test_cofactors_recombine():
    rng = random.Random(23)
    for _ in range(50):
        gens = [random_poly(rng, XYZT, max_terms=3, max_deg=2) for _ in range(3)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        I = IdealBasis(gens, ring=XYZT)
        mults = [random_poly(rng, XYZT, max_terms=2, max_deg=2) for _ in gens]
        p = combine(mults, gens, XYZT)
        c = member_with_cofactors(p, I)
        assert c is not None
        assert combine(c, gens, XYZT) == p


def test_cofactors_reject_nonmember():
    I = ideal(XYZ, "x^2", "y^2")
    assert member_with_cofactors(parse("x*y", XYZ), I) is None


# -- dimension, height, hilbert -----------------------------------------------


def test_dimension_and_height_examples():
    assert height(ideal(XYZT, "x", "z")) == 2
    assert dimension(ideal(XYZT, "x", "z")) == 2
    assert height(ideal(XYZ, "x", "y", "z")) == 3
    # leading terms x^2, x*y, y^3 leave only z free
    assert dimension(ideal(XYZ, "x^2", "x*y", "y^3")) == 1
    assert height(IdealBasis([], ring=XYZ)) == 0


def test_unit_ideal_is_reported_distinctly():
    I = ideal(XYZ, "x", "x + 1")
    with pytest.raises(UnitIdealError):
        dimension(I)
    with pytest.raises(UnitIdealError):
        height(I)


def test_height_of_principal_and_mixed():
    assert height(ideal(XYZ, "x*y - z^2")) == 1
    assert height(ideal(XYZT, "x*y", "x*t", "y*z", "z*t")) == 2


def enumerate_standard(monomial_ideal_gens, ring, degree):
    # brute-force count of degree-d monomials outside a monomial ideal
    count = 0
    for combo in combinations_with_replacement(range(ring.nvars), degree):
        expo = [0] * ring.nvars
        for i in combo:
            expo[i] += 1
        inside = any(all(a <= b for a, b in zip(g, expo))
                     for g in monomial_ideal_gens)
        if not inside:
            count += 1
    return count


def test_hilbert_function_against_enumeration():
    I = ideal(XYZ, "x^2", "y^3")
    gens = [g.lead_monomial() for g in I.generators]
    for d in range(8):
        assert hilbert_function(I, d) == enumerate_standard(gens, XYZ, d)
    got = [hilbert_function(I, d) for d in range(7)]
    assert got == [1, 3, 5, 6, 6, 6, 6]


def test_hilbert_function_of_non_monomial_ideal():
    I = ideal(XYZ, "x^2 - y*z", "x*y^2")
    G = groebner_basis(I)
    lt = [g.lead_monomial() for g in G.generators]
    for d in range(7):
        assert hilbert_function(I, d) == enumerate_standard(lt, XYZ, d)


def test_hilbert_function_edges():
    assert hilbert_function(IdealBasis([], ring=XYZ), 3) == 10
    assert hilbert_function(ideal(XYZ, "x", "y", "z"), 0) == 1
    assert hilbert_function(ideal(XYZ, "x", "y", "z"), 1) == 0
    assert hilbert_function(ideal(XYZ, "x"), -1) == 0
    with pytest.raises(ValueError):
        hilbert_function(ideal(XYZ, "x^2 + y"), 2)


# -- intersection and quotient -------------------------------------------------


def test_intersection_of_coordinate_ideals():
    A = ideal(XYZT, "x", "z")
    B = ideal(XYZT, "y", "t")
    got = intersect(A, B)
    expected = ideal(XYZT, "z*t", "x*t", "x*y", "y*z")
    assert ideal_equal(got, expected)
    assert sorted(str(g) for g in got.generators) == ["x*t", "x*y", "y*z", "z*t"]


def test_intersection_idempotent_and_monomial():
    I = ideal(XYZ, "x^2 - y*z", "z^3")
    assert ideal_equal(intersect(I, I), I)
    got = intersect(ideal(XYZ, "x^2*y"), ideal(XYZ, "y^2*z"))
    assert ideal_equal(got, ideal(XYZ, "x^2*y^2*z"))


def test_intersection_members_random():
    rng = random.Random(31)
    for _ in range(30):
        A = IdealBasis([random_form(rng, XYZ, rng.randint(1, 2)) for _ in range(2)])
        B = IdealBasis([random_form(rng, XYZ, rng.randint(1, 2)) for _ in range(2)])
        got = intersect(A, B)
        for g in got.generators:
            assert member(g, A) and member(g, B)
        for f in A.generators:
            for h in B.generators:
                assert member(f * h, got)


def test_quotient_examples():
    assert ideal_equal(quotient(ideal(XYZ, "x*z", "y*z"), parse("z", XYZ)),
                       ideal(XYZ, "x", "y"))
    assert ideal_equal(quotient(ideal(XYZ, "x^2"), parse("x", XYZ)),
                       ideal(XYZ, "x"))
    assert ideal_equal(quotient(ideal(XYZ, "x", "y"), parse("z", XYZ)),
                       ideal(XYZ, "x", "y"))
    with pytest.raises(ValueError):
        quotient(ideal(XYZ, "x"), XYZ.zero())


# -- syzygies -------------------------------------------------------------------


def test_koszul_syzygy_of_two_variables():
    S = syzygies(ideal(XYZ, "x", "y"))
    assert len(S.generators) == 1
    v = S.generators[0]
    assert [str(p) for p in v] in (["y", "-x"], ["-y", "x"])


def test_syzygies_annihilate_random_inputs():
    rng = random.Random(47)
    for _ in range(30):
        gens = [random_poly(rng, XYZ, max_terms=2, max_deg=2) for _ in range(3)]
        I = IdealBasis(gens, ring=XYZ)
        S = syzygies(I)
        for v in S.generators:
            assert combine(v, gens, XYZ).is_zero()


def test_syzygies_generate_the_kernel():
    # plant a relation, then check it lies in the computed syzygy module
    gens = [parse(s, XYZ) for s in ("x^2", "x*y + z^2", "y*z")]
    I = IdealBasis(gens, ring=XYZ)
    S = syzygies(I)
    planted = (parse("x*y + z^2", XYZ), parse("-x^2", XYZ), XYZ.zero())
    assert combine(planted, gens, XYZ).is_zero()
    assert module_member(planted, S)


def test_syzygies_of_redundant_generators():
    gens = [parse("x", XYZ), XYZ.zero(), parse("x", XYZ)]
    S = syzygies(IdealBasis(gens, ring=XYZ))
    assert module_member((XYZ.zero(), XYZ.one(), XYZ.zero()), S)
    assert module_member((XYZ.one(), XYZ.zero(), -XYZ.one()), S)


# -- minimal generators ---------------------------------------------------------


def test_minimal_generators_prunes_dependents():
    I = ideal(XYZ, "x", "y", "x + y")
    assert [str(g) for g in minimal_generators(I).generators] == ["x", "y"]
    I = ideal(XYZ, "y", "x", "x + y")
    assert [str(g) for g in minimal_generators(I).generators] == ["y", "x"]


def test_minimal_generators_across_degrees():
    I = ideal(XYZ, "x^2", "x")
    assert [str(g) for g in minimal_generators(I).generators] == ["x"]
    I = ideal(XYZ, "x^2", "x^2 + y^2", "y^3")
    kept = [str(g) for g in minimal_generators(I).generators]
    assert kept == ["x^2", "x^2 + y^2"]


def test_minimal_generators_requires_homogeneous():
    with pytest.raises(ValueError):
        minimal_generators(ideal(XYZ, "x^2 + y"))


# -- resolutions -----------------------------------------------------------------


def test_koszul_resolution():
    res = minimal_free_resolution(ideal(XYZ, "x", "y", "z"))
    assert res.length() == 3
    assert res.betti() == ((1, 1, 1), (2, 2, 2), 3)
    assert res.validate()
    assert res.shifts == ((1, 1, 1), (2, 2, 2), (3,))


def test_resolution_of_fat_point_in_plane():
    ring = RingContext(("x", "y"))
    res = minimal_free_resolution(ideal(ring, "x^2", "x*y", "y^2"))
    assert res.length() == 2
    assert res.shifts == ((2, 2, 2), (3, 3))
    assert res.validate()


def cyclic_products(ring, width):
    names = ring.variables
    n = len(names)
    gens = []
    for k in range(n):
        gens.append(parse("*".join(names[(k + i) % n] for i in range(width)), ring))
    return IdealBasis(gens, ring=ring)


def test_resolution_of_cyclic_cubics():
    ring = RingContext(tuple("xyztuv"))
    res = minimal_free_resolution(cyclic_products(ring, 3))
    assert res.betti() == ((3,) * 6, (4,) * 6, 6)
    assert res.validate()


def test_resolution_of_cyclic_quartics():
    ring = RingContext(tuple("xyztuv"))
    res = minimal_free_resolution(cyclic_products(ring, 4))
    assert res.betti() == ((4,) * 6, (5,) * 6, 6)
    assert res.validate()


def test_resolution_exactness_via_hilbert():
    # alternating sum of shifted binomials must reproduce the hilbert function
    from math import comb

    I = cyclic_products(RingContext(tuple("xyztuv")), 3)
    res = minimal_free_resolution(I)
    r = I.ring.nvars

    def rank_contrib(d):
        total = comb(d + r - 1, r - 1) if d >= 0 else 0
        for k, shifts in enumerate(res.shifts):
            sign = -1 if k % 2 == 0 else 1
            for s in shifts:
                dd = d - s
                total += sign * (comb(dd + r - 1, r - 1) if dd >= 0 else 0)
        return total

    for d in range(8):
        assert rank_contrib(d) == hilbert_function(I, d)


def test_resolution_rejects_inhomogeneous_and_unit():
    with pytest.raises(ValueError):
        minimal_free_resolution(ideal(XYZ, "x^2 + y"))
    with pytest.raises(UnitIdealError):
        minimal_free_resolution(ideal(XYZ, "1"))


def test_minimalize_cancels_planted_unit():
    gens = [parse("x", XYZ), parse("y", XYZ), parse("x", XYZ)]
    phi1 = PolyMatrix(XYZ, [gens], row_shifts=(0,), col_shifts=(1, 1, 1))
    cols = [
        (parse("-y", XYZ), parse("x", XYZ), XYZ.zero()),
        (-XYZ.one(), XYZ.zero(), XYZ.one()),
    ]
    phi2 = PolyMatrix(XYZ, [[cols[j][i] for j in range(2)] for i in range(3)],
                      row_shifts=(1, 1, 1), col_shifts=(2, 1))
    res = GradedResolution(XYZ, [phi1, phi2], [(1, 1, 1), (2, 1)], minimal=False)
    for k in range(1):
        assert (res.maps[k] @ res.maps[k + 1]).is_zero()
    slim = minimalize(res)
    assert slim.shifts == ((1, 1), (2,))
    assert slim.validate()
    before = IdealBasis(list(res.maps[0].entries[0]), ring=XYZ)
    after = IdealBasis(list(slim.maps[0].entries[0]), ring=XYZ)
    assert ideal_equal(before, after)


def test_minimalize_keeps_minimal_resolution():
    res = minimal_free_resolution(ideal(XYZ, "x", "y", "z"))
    again = minimalize(res)
    assert again.shifts == res.shifts
    assert [m.entries for m in again.maps] == [m.entries for m in res.maps]


# -- budgets and misc ------------------------------------------------------------


def test_budget_exceeded_is_distinct():
    ring = RingContext(("x", "y", "z", "w"), order="lex")
    I = ideal(ring, "x*z - y^2", "x*w - y*z", "y*w - z^2", "x^3 - w^2*y")
    with pytest.raises(BudgetExceeded):
        groebner_basis(I, budget=Budget(seconds=60, max_monomials=3))
    assert not issubclass(BudgetExceeded, ValueError)


def test_vector_degree():
    v = (parse("x^2", XYZ), parse("y", XYZ))
    assert vector_degree(v, (1, 2)) == 3
    assert vector_degree((XYZ.zero(), XYZ.zero()), (1, 2)) is None
    with pytest.raises(ValueError):
        vector_degree(v, (0, 0))


def test_module_membership():
    M = ModuleBasis(2, [(parse("x", XYZ), XYZ.zero()),
                        (XYZ.zero(), parse("y", XYZ))])
    assert module_member((parse("x*y", XYZ), XYZ.zero()), M)
    assert not module_member((parse("y", XYZ), XYZ.zero()), M)


def test_ideal_contains():
    big = ideal(XYZ, "x", "y")
    small = ideal(XYZ, "x^2 + x*y")
    assert ideal_contains(big, small)
    assert not ideal_contains(small, big)
