import itertools
import random

import pytest

from tdcyclic import GF, CyclicPoly, Poly, cofactor, divides_xs_minus_one, gcd, xgcd, xs_minus_one


def all_polys(field, max_deg):
    for n in range(max_deg + 2):
        for coeffs in itertools.product(range(field.q), repeat=n):
            yield Poly(field, coeffs)


def test_canonical_form_and_degree():
    F = GF(3)
    assert Poly(F, [1, 2, 0, 0]).coeffs == (1, 2)
    z = Poly(F, [0, 0])
    assert z.is_zero and z.degree is None and z.lc == 0
    assert Poly(F, [0, 0, 2]).degree == 2


def test_add_mul_examples():
    F = GF(2)
    one_x = Poly(F, [1, 1])
    assert (one_x + one_x).is_zero
    assert one_x * one_x == Poly(F, [1, 0, 1])  # (1+x)^2 = 1 + x^2 in char 2
    assert (one_x * Poly.zero(F)).is_zero


def test_divmod_examples():
    F2, F3 = GF(2), GF(3)
    q, r = divmod(Poly(F2, [1, 0, 1]), Poly(F2, [1, 1]))
    assert q == Poly(F2, [1, 1]) and r.is_zero
    q, r = divmod(xs_minus_one(F3, 3), Poly(F3, [2, 1]))  # (x^3-1)/(x-1)
    assert q == Poly(F3, [1, 1, 1]) and r.is_zero
    q, r = divmod(Poly(F2, [0, 1]), Poly(F2, [1, 1]))  # x = (x+1) + 1
    assert q == Poly(F2, [1]) and r == Poly(F2, [1])


@pytest.mark.parametrize("q", [2, 3])
def test_division_invariant_exhaustive(q):
    F = GF(q)
    polys = list(all_polys(F, 4))
    for a in polys:
        for b in polys:
            if b.is_zero:
                continue
            quo, rem = divmod(a, b)
            assert quo * b + rem == a
            assert rem.is_zero or rem.degree < b.degree


def test_division_by_zero():
    F = GF(2)
    with pytest.raises(ZeroDivisionError):
        divmod(Poly(F, [1]), Poly.zero(F))


def test_gcd_examples():
    F2, F3 = GF(2), GF(3)
    assert gcd(Poly(F2, [1, 0, 1]), Poly(F2, [1, 1])) == Poly(F2, [1, 1])
    assert gcd(xs_minus_one(F3, 3), Poly(F3, [2, 1])) == Poly(F3, [2, 1])
    f = Poly(F3, [1, 2])  # lc 2: gcd(0, f) is the monic normalization
    assert gcd(Poly.zero(F3), f) == f.monic()
    assert gcd(Poly.zero(F2), Poly.zero(F2)).is_zero


def test_xgcd_examples():
    F2, F3 = GF(2), GF(3)
    g, u, v = xgcd(Poly(F2, [1, 1]), Poly(F2, [0, 1]))
    assert (g, u, v) == (Poly.one(F2), Poly.one(F2), Poly.one(F2))
    f = Poly(F3, [2, 1])
    assert xgcd(f, f) == (f, Poly.one(F3), Poly.zero(F3))
    f2 = Poly(F3, [1, 2])  # lc 2
    g, u, v = xgcd(f2, Poly.zero(F3))
    assert g == f2.monic() and u == Poly(F3, [2]) and v.is_zero


def test_xgcd_identity_random():
    rng = random.Random(11)
    for F in (GF(2), GF(3), GF(2, 2)):
        for _ in range(200):
            a = Poly(F, [rng.randrange(F.q) for _ in range(rng.randint(0, 5))])
            b = Poly(F, [rng.randrange(F.q) for _ in range(rng.randint(0, 5))])
            if a.is_zero and b.is_zero:
                continue
            g, u, v = xgcd(a, b)
            assert u * a + v * b == g
            assert g == gcd(a, b)
            if not a.is_zero:
                assert (a % g).is_zero
            if not b.is_zero:
                assert (b % g).is_zero


def test_residue_fold_and_lift():
    F = GF(2)
    assert CyclicPoly.from_poly(Poly(F, [0, 0, 1]), 2) == CyclicPoly(F, [1, 0])
    assert CyclicPoly.from_poly(Poly(F, [0, 1, 0, 1]), 3) == CyclicPoly(F, [1, 1, 0])
    assert CyclicPoly.zero(F, 4).lift().is_zero
    rng = random.Random(5)
    for _ in range(100):
        s = rng.randint(1, 6)
        e = CyclicPoly(F, [rng.randrange(2) for _ in range(s)])
        assert CyclicPoly.from_poly(e.lift(), s) == e


def test_residue_ring_ops():
    F = GF(2)
    x = CyclicPoly(F, [0, 1])
    one_x = CyclicPoly(F, [1, 1])
    assert one_x * x == one_x  # x^2 = 1 when s = 2
    assert CyclicPoly(F, [1, 0, 0, 0]).shift(1) == CyclicPoly(F, [0, 1, 0, 0])
    for s in (1, 2, 3):
        one = CyclicPoly.one(F, s)
        for bits in itertools.product(range(2), repeat=s):
            a = CyclicPoly(F, bits)
            assert a * one == a
            assert a.shift(s) == a


@pytest.mark.parametrize("s", [1, 2, 3])
def test_residue_commutative_associative_exhaustive(s):
    F = GF(2)
    elems = [CyclicPoly(F, bits) for bits in itertools.product(range(2), repeat=s)]
    for a in elems:
        for b in elems:
            assert a * b == b * a
            for c in elems:
                assert (a * b) * c == a * (b * c)


def test_divisor_and_cofactor():
    F = GF(2)
    p = Poly(F, [1, 1])
    assert divides_xs_minus_one(p, 2)
    assert cofactor(p, 2) == Poly(F, [1, 1])
    p3 = Poly(F, [1, 1, 1])
    assert divides_xs_minus_one(p3, 3)
    assert cofactor(p3, 3) == Poly(F, [1, 1])
    x = Poly(F, [0, 1])
    assert not divides_xs_minus_one(x, 2)
    with pytest.raises(ValueError):
        cofactor(x, 2)


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        Poly(GF(2), [1]) + Poly(GF(3), [1])
    with pytest.raises(ValueError):
        CyclicPoly(GF(2), [1, 0]) * CyclicPoly(GF(3), [1, 0])
    with pytest.raises(ValueError):
        CyclicPoly(GF(2), [1, 0]) + CyclicPoly(GF(2), [1, 0, 0])
