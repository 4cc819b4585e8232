import random

import pytest

from constakit import (
    Poly,
    build_field,
    mul_mod_constacyclic,
    poly_gcd,
    poly_xgcd,
    reciprocal,
    schur,
)


@pytest.fixture(scope="module")
def f3():
    return build_field(3, [])


@pytest.fixture(scope="module")
def f4():
    return build_field(2, [2])


def rand_poly(field, rng, max_deg):
    return Poly(field, [field.elem(rng.randrange(field.cardinality)).rep for _ in range(rng.randrange(max_deg + 2))])


def test_construction_normalizes_leading_zeros(f3):
    p = Poly(f3, [1, 2, 0, 0])
    assert p.degree == 1
    assert p == Poly(f3, [1, 2])
    assert Poly(f3, []).is_zero
    assert Poly.zero(f3).degree == -1


def test_coefficients_ascending(f3):
    p = Poly.from_elements(f3.vector([2, 1, 1]))  # x^2 + x + 2
    assert p.degree == 2
    assert p[0] == f3.elem(2)
    assert p[1] == f3.one()
    assert p[2] == f3.one()
    assert p[17].is_zero  # reads past the end are zero
    assert p.indices() == (2, 1, 1)


def test_iteration_stops(f3):
    p = Poly(f3, [1, 0, 2])
    assert [c.rep for c in p] == [1, 0, 2]


def test_ring_axioms_random(f3):
    rng = random.Random(11)
    for _ in range(60):
        a, b, c = (rand_poly(f3, rng, 5) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a - b) + b == a


def test_degree_of_product(f3):
    rng = random.Random(5)
    for _ in range(40):
        a, b = rand_poly(f3, rng, 6), rand_poly(f3, rng, 6)
        if a.is_zero or b.is_zero:
            assert (a * b).is_zero
        else:
            assert (a * b).degree == a.degree + b.degree


def test_divmod_invariant(f3):
    rng = random.Random(2)
    for _ in range(80):
        a = rand_poly(f3, rng, 8)
        b = rand_poly(f3, rng, 4)
        if b.is_zero:
            with pytest.raises(ZeroDivisionError):
                divmod(a, b)
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree


def test_divides_and_monic(f3):
    x = Poly.x(f3)
    p = (x + Poly.one(f3)) * (x * x + Poly.one(f3))
    assert (x + Poly.one(f3)).divides(p)
    assert not (x + Poly.from_elements([f3.elem(2)])).divides(p + Poly.one(f3))
    doubled = p.scale(f3.elem(2).rep)
    assert doubled.monic() == p.monic() == p


def test_eval_matches_horner(f4):
    rng = random.Random(23)
    for _ in range(30):
        p = rand_poly(f4, rng, 5)
        for a in f4.elements():
            direct = f4.zero()
            for i in range(p.degree, -1, -1):
                direct = direct * a + p[i]
            assert p(a) == direct


def test_gcd_properties(f3):
    rng = random.Random(19)
    for _ in range(60):
        a, b = rand_poly(f3, rng, 6), rand_poly(f3, rng, 6)
        if a.is_zero and b.is_zero:
            with pytest.raises(ValueError):
                poly_gcd(a, b)
            continue
        g = poly_gcd(a, b)
        assert g.is_monic
        assert g.divides(a) and g.divides(b)
        d, u, v = poly_xgcd(a, b)
        assert d == g
        assert u * a + v * b == d


def test_gcd_with_zero(f3):
    p = Poly(f3, [2, 1])
    assert poly_gcd(p, Poly.zero(f3)) == p.monic()
    assert poly_gcd(Poly.zero(f3), p) == p.monic()


def test_pow_mod(f3):
    from constakit.poly import pow_mod

    modulus = Poly(f3, [2, 0, 0, 0, 1])  # x^4 + 2 = x^4 - 1
    x = Poly.x(f3)
    assert pow_mod(x, 4, modulus) == Poly.one(f3)
    assert pow_mod(x, 81, modulus) == pow_mod(x, 81 % 4, modulus)


def test_reciprocal(f3):
    p = Poly(f3, [2, 1, 1])
    r = reciprocal(p)
    assert r == Poly(f3, [1, 1, 2])
    assert reciprocal(r) == p
    # reversal swaps evaluation at a and 1/a up to a power
    two = f3.elem(2)
    assert r(two) == p(two.inverse()) * two**p.degree


def test_mul_mod_constacyclic(f3):
    lam = f3.elem(2)
    a = Poly(f3, [1, 1])
    b = Poly(f3, [0, 0, 0, 1])  # x^3
    # (x^4 = lam): (1+x)*x^3 = x^3 + x^4 -> x^3 + 2
    got = mul_mod_constacyclic(a, b, 4, lam)
    assert got == Poly(f3, [2, 0, 0, 1])


def test_mul_mod_constacyclic_matches_divmod(f3):
    rng = random.Random(31)
    lam = f3.elem(2)
    modulus = Poly(f3, [1, 0, 0, 0, 1])  # x^4 - 2 = x^4 + 1
    for _ in range(40):
        a, b = rand_poly(f3, rng, 3), rand_poly(f3, rng, 3)
        assert mul_mod_constacyclic(a, b, 4, lam) == (a * b) % modulus


def test_schur_componentwise(f3):
    u = f3.vector([1, 2, 0, 1])
    v = f3.vector([2, 2, 1, 1])
    assert [e.rep for e in schur(u, v)] == [2, 1, 0, 1]
    with pytest.raises(ValueError):
        schur(u, v[:3])
