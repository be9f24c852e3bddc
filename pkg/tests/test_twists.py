import math
from fractions import Fraction

import pytest
import sympy

from langtrotter import twists
from langtrotter.twists import DirichletCharacter, EigenvalueSystem, NumberFieldSpec


@pytest.fixture(scope="module")
def synthetic():
    return twists.synthetic_quadratic_system()


@pytest.fixture(scope="module")
def detected(synthetic):
    return twists.detect_inner_twists(synthetic)


# ---------------------------------------------------------------------------
# number fields


def test_quadratic_field_arithmetic():
    E = twists.quadratic_field(2)
    r2 = E.gen
    assert E.mul(r2, r2) == E.element(2)
    a = E.element([3, -5])
    assert E.mul(a, E.inv(a)) == E.one
    assert E.minpoly(r2) == (Fraction(-2), Fraction(0), Fraction(1))
    assert E.apply(1, r2) == E.neg(r2)
    assert E.is_rational(E.element(7)) and not E.is_rational(r2)
    with pytest.raises(ValueError):
        NumberFieldSpec((-4, 0, 1))  # reducible
    with pytest.raises(ValueError):
        NumberFieldSpec((-2, 0, 1), [(1, 1)])  # not a root


@pytest.mark.parametrize(
    "poly,w",
    [((-2, 0, 1), 2), ((1, 0, 1), 4), ((1, 1, 1), 6), ((1, 1, 1, 1, 1), 10), ((1, 0, 0, 0, 1), 8), ((1, 0, -1, 0, 1), 12)],
)
def test_roots_of_unity_count(poly, w):
    E = NumberFieldSpec(poly)
    got, zeta = E.roots_of_unity
    assert got == w
    powers = {E.pow(zeta, k) for k in range(w)}
    assert len(powers) == w and E.pow(zeta, w) == E.one


def _squarefree_part(q: Fraction) -> int:
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    return sign * math.prod(p for p, e in sympy.factorint(abs(n)).items() if e % 2)


def test_biquadratic_fixed_fields():
    E = twists.biquadratic_field()
    assert len(E.automorphisms) == 4
    seen = set()
    for s in (1, 2, 3):
        ff = twists.fixed_field_degree([twists.InnerTwist(s, DirichletCharacter.trivial(), E)], E)
        assert ff.gamma_order == 2 and ff.degree == 2
        c, b, one = ff.minpoly
        assert one == 1
        seen.add(_squarefree_part(b * b - 4 * c))
    assert seen == {2, 3, 6}


def test_automorphism_composition_and_inverse():
    E = twists.biquadratic_field()
    for i in range(4):
        assert E.compose(i, E.inverse_automorphism(i)) == 0
        assert E.compose(i, i) == 0  # Klein four-group


# ---------------------------------------------------------------------------
# Dirichlet characters


def _primitive_count(m):
    """Number of primitive characters mod m (multiplicative)."""
    out = 1
    for p, e in sympy.factorint(m).items():
        if e == 1:
            out *= p - 2
        else:
            out *= p**e - 2 * p ** (e - 1) + p ** (e - 2)
    return out


@pytest.mark.parametrize("m", list(range(1, 61)))
def test_primitive_character_counts(m):
    chars = twists.primitive_characters(m)
    assert len(chars) == _primitive_count(m)
    assert len(set(chars)) == len(chars)


def test_unit_group_shape():
    for m in range(1, 200):
        orders, logs = twists.unit_group(m)
        assert math.prod(orders) == sympy.totient(m)
        assert len(logs) == sympy.totient(m) and len(set(logs.values())) == len(logs)


def test_quadratic_character_is_legendre():
    chi = twists.quadratic_character(11)
    for r in range(1, 11):
        assert (chi(r) == 0) == (sympy.legendre_symbol(r, 11) == 1)
    assert chi(22) is None
    assert chi.order == 2 and chi.is_primitive()


def test_character_algebra():
    chi5 = twists.quadratic_character(5)
    lifted = chi5.lift(40)
    assert lifted.conductor() == 5 and lifted.primitive() == chi5
    assert (chi5 * chi5).is_trivial
    assert chi5.inverse() == chi5
    chi = DirichletCharacter.from_exponents(7, [1])
    assert chi.order == 6 and chi.power(6).is_trivial
    assert chi * chi.inverse() == DirichletCharacter.trivial()
    with pytest.raises(ValueError):
        DirichletCharacter(5, ((1, 0), (2, Fraction(1, 2)), (3, 0), (4, Fraction(1, 2))))


def test_load_character(tmp_path):
    path = tmp_path / "chi.txt"
    path.write_text("5\n1,0,1\n2,1,2\n3,1,2\n4,0,1\n")
    assert twists.load_character(path) == twists.quadratic_character(5)


def test_character_values_in_field():
    E = NumberFieldSpec((1, 0, 1))  # Q(i)
    chi = DirichletCharacter.from_exponents(5, [1])  # order 4
    assert chi.in_field(E, 2) in (E.gen, E.neg(E.gen))
    assert chi.in_field(E, 5) == E.zero


# ---------------------------------------------------------------------------
# twist detection


def test_synthetic_twists(synthetic, detected):
    chi5 = twists.quadratic_character(5)
    assert [(t.sigma, t.chi) for t in detected] == [(0, DirichletCharacter.trivial()), (1, chi5)]
    ff = twists.fixed_field_degree(detected, synthetic)
    assert ff.gamma_order == 2 and ff.degree == 1
    K = twists.kernel_field(detected)
    assert K.modulus == 5 and K.subgroup == frozenset({1, 4}) and K.degree == 2


def test_group_law_on_detected(detected):
    for t in detected:
        for u in detected:
            assert twists.twist_group_law(t, u) in detected
        assert twists.twist_inverse(t) in detected


def test_primes_in_kernel_field_have_rational_traces(synthetic, detected):
    K = twists.kernel_field(detected)
    E = synthetic.field
    for p, a in synthetic.table:
        if E.is_rational(a) and a != E.zero:
            assert K.split_test(p)
        if K.split_test(p):
            assert E.is_rational(a)


def test_corruption_destroys_detection(synthetic):
    E = synthetic.field
    table = list(synthetic.table)
    i = next(k for k, (p, a) in enumerate(table) if p == 101)
    p, a = table[i]
    table[i] = (p, E.add(a, E.gen) if E.is_rational(a) else E.add(a, E.one))
    bad = EigenvalueSystem(E, table, level=synthetic.level)
    found = twists.detect_inner_twists(bad)
    assert [(t.sigma, t.chi.is_trivial) for t in found] == [(0, True)]
    assert twists.twist_relation_failures(bad, 1, twists.quadratic_character(5)) == 1
    recovered = twists.detect_inner_twists(bad, exceptions=1)
    assert len(recovered) == 2


def test_detection_needs_full_table(synthetic):
    short = EigenvalueSystem(synthetic.field, synthetic.table[:100], level=synthetic.level)
    with pytest.raises(ValueError):
        twists.detect_inner_twists(short)


def test_cm_type_degeneracy():
    """a_p = 0 on half the primes lets two characters match the identity."""
    Q = NumberFieldSpec((-1, 1))
    table = [(p, 0 if p % 4 == 3 else (p % 7) + 1) for p in sympy.primerange(2, 1001)]
    with pytest.raises(twists.TwistDegeneracy):
        twists.detect_inner_twists(EigenvalueSystem(Q, table), modulus_bound=10)


def test_F_equals_Q_of_b(synthetic, detected):
    ff = twists.fixed_field_degree(detected, synthetic)
    E = synthetic.field
    b_table = [(7, E.element([0, 1])), (11, E.element([3]))]
    assert twists.check_F_equals_Q_bq(synthetic, b_table, ff.degree) == 11


def test_system_from_csv(tmp_path):
    E = twists.quadratic_field(2)
    path = tmp_path / "table.csv"
    path.write_text("p,c0,c1\n3,0,1\n7,2,0\n11,1/2,-1\n")
    sys_ = EigenvalueSystem.from_csv(path, E, level=5)
    assert sys_.primes == [3, 7, 11]
    assert sys_.table[2][1] == (Fraction(1, 2), Fraction(-1))
    with pytest.raises(ValueError):
        EigenvalueSystem(E, [(5, E.one)], level=5)
