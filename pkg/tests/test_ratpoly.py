import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pencilkit.ratpoly import (
    HomogPoly,
    ONE,
    ZERO,
    hif_degree,
    hif_divides,
    hif_from_json,
    hif_gcd,
    hif_lcm,
    hif_to_json,
    poly,
    poly_add,
    poly_divides,
    poly_divmod,
    poly_from_roots,
    poly_from_strings,
    poly_gcd,
    poly_lcm,
    poly_monic,
    poly_mul,
    poly_to_strings,
    linear_multiplicity,
    rational_roots,
)

S = poly((0, 1))


def test_gcd_worked_examples():
    # gcd(s^2 - s, s) = s
    assert poly_gcd(poly((0, -1, 1)), S) == S
    # gcd with zero returns the other argument made monic
    assert poly_gcd(poly((2, 4)), ZERO) == poly((Fraction(1, 2), 1))
    assert poly_gcd(ZERO, ZERO) == ZERO
    # lcm(s, s - 1) = s^2 - s
    assert poly_lcm(S, poly((-1, 1))) == poly((0, -1, 1))
    assert poly_lcm(S, ZERO) == ZERO


def test_gcd_against_factored_oracle():
    # products of linear factors with known root multisets: the gcd is the
    # product over the intersection of the multisets
    rng = random.Random(20240)
    pool = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2)]
    for _ in range(200):
        ra = [rng.choice(pool) for _ in range(rng.randint(0, 5))]
        rb = [rng.choice(pool) for _ in range(rng.randint(0, 5))]
        inter = []
        pool_b = list(rb)
        for r in ra:
            if r in pool_b:
                inter.append(r)
                pool_b.remove(r)
        assert poly_gcd(poly_from_roots(ra), poly_from_roots(rb)) == poly_from_roots(inter)


@given(
    st.lists(st.integers(-4, 4), min_size=0, max_size=5),
    st.lists(st.integers(-4, 4), min_size=0, max_size=5),
)
def test_gcd_divides_both_and_degree_sum(ca, cb):
    a, b = poly(ca), poly(cb)
    g = poly_gcd(a, b)
    assert poly_divides(g, a) and poly_divides(g, b)
    if a and b:
        l = poly_lcm(a, b)
        assert len(g) + len(l) == len(a) + len(b)
        assert poly_divides(a, l) and poly_divides(b, l)


def test_divmod_reconstructs():
    a = poly((1, 2, 0, 3))
    b = poly((-1, 1))
    q, r = poly_divmod(a, b)
    assert poly_add(poly_mul(q, b), r) == a
    assert len(r) < len(b)


def test_rational_roots_and_multiplicity():
    p = poly_from_roots([Fraction(1, 2), Fraction(1, 2), Fraction(-3)])
    roots, rem = rational_roots(p)
    assert roots == {Fraction(1, 2): 2, Fraction(-3): 1}
    assert rem == ONE
    assert linear_multiplicity(p, Fraction(1, 2)) == 2
    assert linear_multiplicity(p, Fraction(5)) == 0
    # irreducible quadratic stays in the remainder
    mixed = poly_mul(poly((1, 0, 1)), poly_from_roots([Fraction(2)]))
    roots, rem = rational_roots(mixed)
    assert roots == {Fraction(2): 1}
    assert rem == poly((1, 0, 1))


def test_hif_examples():
    unit = HomogPoly.one()
    assert hif_divides(unit, HomogPoly(2, poly((-1, 1))))
    assert hif_gcd(HomogPoly(1, S), HomogPoly(0, poly((0, 0, 1)))) == HomogPoly(0, S)
    assert hif_degree(HomogPoly(2, poly((-3, 1)))) == 3
    with pytest.raises(ValueError):
        hif_degree(HomogPoly.zero())


def test_hif_zero_conventions():
    zero = HomogPoly.zero()
    a = HomogPoly(1, S)
    assert hif_divides(a, zero)
    assert not hif_divides(zero, a)
    assert hif_divides(zero, zero)
    assert hif_gcd(a, zero) == a
    assert hif_lcm(a, zero) == zero


def test_hif_lattice_laws():
    rng = random.Random(7)
    samples = []
    for _ in range(60):
        k = rng.randint(0, 3)
        roots = [rng.choice((0, 1, -1)) for _ in range(rng.randint(0, 3))]
        samples.append(HomogPoly(k, poly_from_roots(roots)))
    for a in samples[:20]:
        for b in samples[20:40]:
            g, l = hif_gcd(a, b), hif_lcm(a, b)
            assert hif_divides(g, a) and hif_divides(g, b)
            assert hif_divides(a, l) and hif_divides(b, l)
            assert hif_degree(g) + hif_degree(l) == hif_degree(a) + hif_degree(b)


def test_hif_monic_validation():
    with pytest.raises(ValueError):
        HomogPoly(0, poly((1, 2)))
    with pytest.raises(ValueError):
        HomogPoly(1, ZERO)  # zero must carry inf_exp 0
    assert poly_monic(poly((2, 4))) == poly((Fraction(1, 2), 1))


def test_serialization_round_trip():
    p = poly((Fraction(-3, 2), 0, 1))
    assert poly_to_strings(p) == ["-3/2", "0", "1"]
    assert poly_from_strings(poly_to_strings(p)) == p
    h = HomogPoly(2, poly((-1, 1)))
    assert hif_from_json(json.loads(json.dumps(hif_to_json(h)))) == h
