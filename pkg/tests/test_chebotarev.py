import math
from fractions import Fraction

import numpy as np
import pytest
import sympy

from langtrotter import chebotarev as cb

from oracles import primes_upto


def li_oracle(x):
    return float((sympy.li(x) - sympy.li(2)).evalf(30))


@pytest.mark.parametrize("x", [3, 10, 1e3, 1e4, 1e6, 1e9, 1e12])
def test_li(x):
    assert abs(cb.li(x) - li_oracle(x)) <= 1e-9 * li_oracle(x)
    assert abs(cb.li_closed_form(x) - cb.li(x)) <= 1e-9 * cb.li(x)


def test_li_domain():
    assert cb.li(2) == 0.0
    with pytest.raises(ValueError):
        cb.li(1.5)


def test_alpha_table():
    expect = {
        (1, "unconditional", False): Fraction(1, 11),
        (1, "unconditional", True): Fraction(1, 8),
        (1, "grh", False): Fraction(1, 12),
        (1, "grh", True): Fraction(1, 11),
        (2, "unconditional", False): Fraction(2, 21),
        (2, "unconditional", True): Fraction(2, 15),
        (2, "grh", False): Fraction(2, 23),
        (2, "grh", True): Fraction(2, 21),
    }
    for (n, r, z), v in expect.items():
        assert cb.alpha_value(n, r, z) == v
    with pytest.raises(ValueError):
        cb.alpha_value(1, "riemann", False)
    with pytest.raises(ValueError):
        cb.alpha_value(0, "grh", False)


@pytest.mark.parametrize("n", range(1, 21))
def test_exponent_compositions(n):
    for z in (False, True):
        assert cb.alpha_value(n, "unconditional", z) == cb.serre_exponent(*cb.serre_dimensions(n, z))
        assert cb.alpha_value(n, "grh", z) == cb.balance_exponent(n, cb.grh_second_term_exponent(n, z))
    assert cb.serre_exponent(*cb.serre_dimensions(n, True, strengthened=True)) == Fraction(n, 8 * n + 1)


def test_serre_exponent_validation():
    assert cb.serre_exponent(3, 1, 0) == Fraction(2, 3)
    for bad in ((3, 3, 0), (3, 1, 7), (2, 1, 4)):
        with pytest.raises(ValueError):
            cb.serre_exponent(*bad)


def test_balance_exponent_balances():
    """At y = x^(alpha/s) the two terms y^-s x and y^e x^(1/2) have equal exponents."""
    for s, e in ((1, Fraction(9, 2)), (2, Fraction(17, 2)), (3, 5)):
        a = cb.balance_exponent(s, e)
        assert 1 - a == Fraction(e) * a / s + Fraction(1, 2)


def test_profile():
    p = cb.BoundProfile(1, "GRH", False)
    assert p.regime == "grh" and p.alpha == Fraction(1, 12)
    assert p.csv_row() == (1, "grh", 0, 1, 12)
    x = 1e10
    assert p.curve(x) == pytest.approx(x ** (11 / 12) / math.log(x) ** (10 / 12))
    u = cb.BoundProfile(2, "unconditional", True, epsilon=0.05)
    assert u.curve(x) == pytest.approx(x / math.log(x) ** (1 + 2 / 15 - 0.05))
    with pytest.raises(ValueError):
        cb.BoundProfile(1, "grh", False, alpha=Fraction(1, 11))
    with pytest.raises(ValueError):
        cb.BoundProfile(1, "grh", False, epsilon=0.1)


def test_m_constant_and_hensel():
    gauss = cb.ExtensionData(2, 1, 2, 1, {2})
    assert cb.m_constant(gauss) == 8
    true_gauss = math.log(abs(int(sympy.discriminant(sympy.Symbol("x") ** 2 + 1))))
    assert cb.hensel_bound(gauss) >= true_gauss
    x = sympy.Symbol("x")
    zeta5 = cb.ExtensionData(4, 1, 4, 1, {5})
    assert cb.hensel_bound(zeta5) >= math.log(abs(int(sympy.discriminant(sympy.cyclotomic_poly(5, x), x))))
    with pytest.raises(ValueError):
        cb.ExtensionData(4, 2, 3, 1)


def test_lmo_threshold_and_boundary():
    L = math.log(125)
    T = cb.lmo_threshold(L)
    assert T == pytest.approx(L * math.log(L) * math.log(math.log(math.log(6) + L)))
    xb = cb.lmo_boundary(L)
    assert math.log(xb) == pytest.approx(T, rel=1e-12)
    ok, val = cb.lmo_bound(xb * 1.01, 0.25, L)
    assert ok and val == pytest.approx(0.25 * cb.li(xb * 1.01))
    assert not cb.lmo_bound(xb * 0.99, 0.25, L)[0]
    assert cb.lmo_threshold(0.5) == 0.0


def test_grh_and_zywina_bounds():
    b = cb.grh_bound(1e6, 1, 4, math.log(125), 4)
    assert b.main == pytest.approx(cb.li(1e6) / 4)
    assert b.total == pytest.approx(b.main + b.error_disc + b.error_degree)
    z = cb.zywina_bound(1e6, 1, 4, 1, 10)
    assert z == pytest.approx(1e6 / math.log(1e6) / 4 + 1e3 / math.log(1e6) * math.log(10))
    with pytest.raises(ValueError):
        cb.zywina_bound(1e6, 1, 4, 1, 1)


def test_assembled_bound_optimum():
    """The schedule y(x) sits near the minimum of the assembled bound over l."""
    x = 1e12
    y = float(cb.optimal_ell(x, 1, cb.alpha_value(1, "grh", False)))
    ells = np.geomspace(y / 10, y * 10, 2001)
    vals = cb.assembled_bound(x, 1, False, ell=ells)
    best = ells[np.argmin(vals)]
    assert y / 3 < best < y * 3


def test_fits():
    x = np.geomspace(1e8, 1e14, 50)
    assert cb.loglog_fit(x, 3 * x**0.7) == pytest.approx(0.7)
    assert cb.power_exponent_fit(x, x**0.7 / np.log(x) ** 1.3) == pytest.approx(0.7)


# ---------------------------------------------------------------------------
# simulator


def test_prime_sieve():
    assert cb.prime_sieve(1000).tolist() == primes_upto(1000)
    assert len(cb.prime_sieve(1)) == 0


def test_simulation_determinism_and_block_independence():
    g = cb.torus_model(5).model()
    s1 = cb.simulate_frobenius(g, 10**5, seed=4)
    s2 = cb.simulate_frobenius(g, 10**5, seed=4)
    s3 = cb.simulate_frobenius(g, 10**5, seed=5)
    assert s1.draws == s2.draws and s1.draws != s3.draws
    short = cb.simulate_frobenius(g, 5 * 10**4, seed=4)
    assert s1.draws[: len(short.draws)] == short.draws


def test_stream_validation():
    with pytest.raises(ValueError):
        cb.FrobeniusStream(5, {"a": 1, "b": 3}, [])
    with pytest.raises(ValueError):
        cb.FrobeniusStream(2, {"a": 1, "b": 1}, [(3, "a"), (2, "b")])


def test_chi_square_detects_bias():
    g = cb.GroupModel({0: 1, 1: 1})
    s = cb.simulate_frobenius(g, 10**5, seed=0)
    assert cb.chi_square_pvalue(s) > 1e-3
    skew = cb.FrobeniusStream(2, {0: 1, 1: 1}, [(p, 0 if i % 3 else 1) for i, p in enumerate(s.primes.tolist())])
    assert cb.chi_square_pvalue(skew) < 1e-6


def test_weighted_count_by_hand():
    """Trivial group: every prime power counts with weight 1/m."""
    g = cb.GroupModel({"e": 1}, lambda c, m: "e")
    s = cb.simulate_frobenius(g, 1000)
    wc = cb.weighted_pi(s, {"e"}, 1000)
    ref = sum(1 / m for p in primes_upto(1000) for m in range(1, 11) if p**m <= 1000)
    assert wc.plain == 168 and wc.weighted == pytest.approx(ref)
    assert wc.difference == pytest.approx(ref - 168)


def test_subgroup_model_residue_degrees():
    G = cb.AbelianGroup((4, 2))
    H = cb.SubgroupModel(G, 2)
    assert H.contains((2, 1)) and not H.contains((1, 0))
    assert H.residue_degree((1, 0)) == 2 and H.residue_degree((2, 1)) == 1
    with pytest.raises(ValueError):
        cb.SubgroupModel(G, 3)


def test_gsp4_trace_classes():
    m = cb.gsp4_trace_classes(3)
    assert m.class_sizes == {0: 37422, 1: 33129, 2: 33129}
    assert m.order == 2 * 51840


def test_envelope_and_sigma():
    assert cb.binomial_sigma(100, 0.5) == 5
    assert cb.difference_envelope([math.e**2])[0] == pytest.approx(math.e / 2)
