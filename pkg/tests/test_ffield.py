import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from langtrotter.ffield import (
    GF,
    QQ,
    Poly,
    conway_polynomial,
    discriminant,
    field,
    int_poly,
    is_irreducible_mod_p,
    poly_mod,
    resultant,
    roots_in_field,
    splits_completely_nonzero,
)

from oracles import primes_upto, splits_by_evaluation


def test_characteristic_two_rejected():
    with pytest.raises(ValueError):
        field(2)


@pytest.mark.parametrize("p,k", [(3, 3), (3, 2), (5, 2), (7, 2), (3, 4)])
def test_field_axioms_exhaustive(p, k):
    F = field(p, k)
    els = F.elements()
    units = F.units()
    assert len(els) == p**k and len(units) == p**k - 1
    assert all(F.mul(u, F.inv(u)) == 1 for u in units.tolist())
    # multiplicative group is cyclic of order q - 1
    assert all(F.pow(u, F.q - 1) == 1 for u in units.tolist())
    a, b, c = 3 % F.q, (F.q - 2), (F.q // 2)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_frobenius_is_additive_in_extension():
    F = field(5, 3)
    for a in range(0, F.q, 7):
        for b in range(0, F.q, 11):
            assert F.pow(F.add(a, b), 5) == F.add(F.pow(a, 5), F.pow(b, 5))


def _x_order_quadratic(c0, c1, p):
    """Order of x in F_p[x]/(x^2 + c1 x + c0) by repeated multiplication (0 if never 1)."""
    a, b = 1, 0  # a + b x
    for k in range(1, p * p):
        a, b = (-c0 * b) % p, (a - c1 * b) % p
        if (a, b) == (1, 0):
            return k
    return 0


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_default_quadratic_modulus_is_least_primitive(p):
    c0, c1, one = conway_polynomial(p, 2)
    assert one == 1
    assert _x_order_quadratic(c0, c1, p) == p * p - 1
    for h1 in range(p):
        for h0 in range(p):
            if (h1, h0) >= (c1, c0):
                continue
            assert _x_order_quadratic(h0, h1, p) != p * p - 1


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        GF(3, 2, modulus=(2, 0, 1))  # x^2 - 1
    with pytest.raises(ValueError):
        field(9)
    assert is_irreducible_mod_p((1, 0, 1), 3)
    assert not is_irreducible_mod_p((1, 0, 1), 5)


def test_element_wrappers():
    F = field(7)
    x = F(3)
    assert int(x * x.inverse()) == 1
    assert int(x**6) == 1
    assert int((x - 5) / 2) == (3 - 5) * pow(2, -1, 7) % 7
    E = field(3, 2)
    z = E(E.encode((0, 1)))
    assert (z**8).value == 1


def test_roots_with_multiplicity():
    F = field(7)
    f = Poly.from_roots([F(2), F(2), F(5)], F)
    assert sorted(int(r) for r in roots_in_field(f)) == [2, 2, 5]
    assert roots_in_field(poly_mod([1, 0, 1], 7)) == []
    with pytest.raises(ValueError):
        roots_in_field(Poly([], F))


def test_splitting_edge_cases():
    F = field(5)
    assert splits_completely_nonzero(Poly.from_roots([F(1), F(2), F(3), F(4)], F))
    assert not splits_completely_nonzero(Poly.from_roots([F(0), F(2), F(3), F(4)], F))
    assert not splits_completely_nonzero(poly_mod([2, 0, 1, 0, 1], 5))
    with pytest.raises(ValueError):
        splits_completely_nonzero(Poly([0], F))


def test_splitting_detector_against_evaluation():
    """1000 quartics per prime 5 <= l <= 97, half of them built from random roots."""
    rng = random.Random(20240501)
    for ell in [q for q in primes_upto(97) if q >= 5]:
        for i in range(1000):
            if i % 2:
                roots = [rng.randrange(ell) for _ in range(4)]
                coeffs = [1]
                for r in roots:
                    coeffs = [(b - r * a) % ell for a, b in zip(coeffs + [0], [0] + coeffs)]
                lc = rng.randrange(1, ell)
                coeffs = [c * lc % ell for c in coeffs]
            else:
                coeffs = [rng.randrange(ell) for _ in range(4)] + [rng.randrange(1, ell)]
            assert splits_completely_nonzero(poly_mod(coeffs, ell)) == splits_by_evaluation(coeffs, ell), (ell, coeffs)


def sylvester_det(f, g):
    import sympy

    m, n = len(f) - 1, len(g) - 1
    rows = []
    for i in range(n):
        rows.append([0] * i + f[::-1] + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + g[::-1] + [0] * (m - 1 - i))
    return int(sympy.Matrix(rows).det())


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=5), st.lists(st.integers(-20, 20), min_size=2, max_size=4))
def test_resultant_matches_sylvester(f, g):
    F, G = int_poly(f), int_poly(g)
    if F.degree < 1 or G.degree < 1:
        return
    ref = sylvester_det([int(c) for c in F.coeffs], [int(c) for c in G.coeffs])
    assert Fraction(resultant(F, G)) == ref
    p = 101
    if F.lc % p and G.lc % p:
        assert resultant(poly_mod(f, p), poly_mod(g, p)) == ref % p


def test_discriminant_values():
    assert discriminant(int_poly([1, 0, 1])) == -4
    assert discriminant(int_poly([1, 1, 1, 1, 1])) == 125
    assert discriminant(int_poly([-2, 0, 1])) == 8
    # cubic x^3 + a x + b: -4a^3 - 27b^2
    assert discriminant(int_poly([3, 2, 0, 1])) == -4 * 8 - 27 * 9
    assert discriminant(poly_mod([3, 2, 0, 1], 11)) == (-4 * 8 - 27 * 9) % 11


def test_poly_arithmetic_over_q():
    f = int_poly([1, 2, 1])
    g = int_poly([1, 1])
    q, r = f.divmod(g)
    assert q == g and r.is_zero()
    assert f.gcd(int_poly([-1, 0, 1])).monic() == g
    assert f.ring is QQ
