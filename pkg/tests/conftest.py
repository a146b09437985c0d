"""Shared helpers for the test suite: seeded random polynomial generators."""

from __future__ import annotations

import random
from fractions import Fraction

from presmat.ring import Polynomial, RingContext


def random_monomial(rng: random.Random, nvars: int, max_deg: int = 3):
    e = [0] * nvars
    for _ in range(rng.randint(0, max_deg)):
        e[rng.randrange(nvars)] += 1
    return tuple(e)


def random_poly(rng: random.Random, ring: RingContext, max_terms: int = 4,
                max_deg: int = 3, allow_zero: bool = True) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        m = random_monomial(rng, ring.nvars, max_deg)
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if c:
            terms[m] = c
    p = Polynomial(ring, terms)
    if not allow_zero and p.is_zero():
        return ring.one()
    return p


def random_form(rng: random.Random, ring: RingContext, degree: int,
                max_terms: int = 3) -> Polynomial:
    """Random nonzero homogeneous polynomial of the given degree."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * ring.nvars
        for _ in range(degree):
            e[rng.randrange(ring.nvars)] += 1
        c = Fraction(rng.randint(-3, 3))
        if c:
            terms[tuple(e)] = c
    p = Polynomial(ring, terms)
    if p.is_zero():
        e = [0] * ring.nvars
        e[0] = degree
        p = ring.monomial(tuple(e))
    return p


def oracle_det(rows):
    """Naive Laplace-expansion determinant; the cross-check oracle."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        a = rows[0][j]
        sub = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = a * oracle_det(sub)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total
