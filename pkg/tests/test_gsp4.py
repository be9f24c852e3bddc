import numpy as np
import pytest

from langtrotter import gsp4
from langtrotter.ffield import field

from oracles import gsp4_similitude_histogram_mod3, upper_triangular_members


@pytest.fixture(scope="module")
def brute_mod3():
    return gsp4_similitude_histogram_mod3()


def test_sp4_order_by_full_matrix_scan(brute_mod3):
    assert brute_mod3[1] == 51840 == 3**4 * (3**2 - 1) * (3**4 - 1)
    assert gsp4.count_slice("sp4", 3) == brute_mod3[1]


def test_gsp4_order_mod3(brute_mod3):
    assert gsp4.count_slice("gsp4", 3) == brute_mod3[1] + brute_mod3[2] == gsp4.order_formulas(3, "gsp4")


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_symplectic_bases_closed_form(q):
    assert gsp4.count_symplectic_bases(q) == gsp4.sp4_order(q)


def test_order_formula_for_product_ring():
    st = gsp4.SplittingType(5, (1, 2))
    assert gsp4.order_formulas(5, "G", st) == 4 * gsp4.sp4_order(5) * gsp4.sp4_order(25)
    with pytest.raises(ValueError):
        gsp4.order_formulas(5, "G", gsp4.SplittingType(7, (1,)))
    with pytest.raises(ValueError):
        gsp4.SplittingType(5, (2, 2, 1))


def test_enumeration_budget():
    with pytest.raises(gsp4.BudgetExceeded):
        next(gsp4.enumerate_arrays("sp4", 5))


def test_upper_slice_matches_brute_force():
    brute = upper_triangular_members(3)
    got = np.concatenate([m for m, _ in gsp4.enumerate_arrays("upper", 3)])
    key = lambda M: tuple(int(v) for v in M.ravel())  # noqa: E731
    assert sorted(key(M) for M, _ in brute) == sorted(key(M) for M in got)


def test_enumerated_members_are_members():
    F = field(3)
    for mats, nus in gsp4.enumerate_arrays("gsp4", 3):
        idx = np.random.default_rng(0).integers(0, len(mats), 2000)
        assert np.array_equal(gsp4.similitudes(F, mats[idx]), nus[idx])
        break


def test_gspmatrix_group_operations():
    F = field(7)
    g = gsp4.borel_element(F, 2, 3, 5, n=1, r=2, s=3, t=4)
    h = gsp4.borel_element(F, 6, 1, 3, n=5, r=0, s=1, t=2)
    gh = g @ h
    assert gh.nu == F.mul(g.nu, h.nu)
    assert (g @ g.inverse()).array.tolist() == np.eye(4, dtype=int).tolist()
    with pytest.raises(ValueError):
        gsp4.GSpMatrix(F, tuple(range(16)), 1)
    # charpoly obeys X^4 - t X^3 + ... - nu t X + nu^2
    P = g.charpoly()
    assert P.coeffs[0] == F.mul(g.nu, g.nu)
    assert P.coeffs[3] == F.neg(g.trace())


def test_charpoly_functional_equation_detects_corruption():
    F = field(5)
    g = gsp4.borel_element(F, 1, 2, 3)
    bad = object.__new__(gsp4.GSpMatrix)
    object.__setattr__(bad, "gf", F)
    object.__setattr__(bad, "entries", tuple(int(v) for v in (g.array + np.diag([1, 0, 0, 0])).ravel() % 5))
    object.__setattr__(bad, "nu", g.nu)
    with pytest.raises(ArithmeticError):
        gsp4.charpoly(bad)


@pytest.mark.parametrize("q", [5, 9, 11])
def test_random_sp4_is_symplectic(q):
    F = gsp4.field_for_q(q)
    rng = np.random.default_rng(1)
    g = gsp4.random_sp4(F, 500, rng)
    assert np.all(gsp4.similitudes(F, g) == 1)
    g, mu = gsp4.random_gsp4(F, 500, rng)
    assert np.array_equal(gsp4.similitudes(F, g), mu)


def test_random_sp4_uniform_on_traces_mod3():
    """Sample trace frequencies agree with the exhaustive distribution over Sp4(F_3)."""
    from scipy import stats

    F = field(3)
    exact = np.zeros(3)
    for mats, nus in gsp4.enumerate_arrays("sp4", 3):
        exact += np.bincount(gsp4.traces(F, mats), minlength=3)
    g = gsp4.random_sp4(F, 60000, np.random.default_rng(7))
    obs = np.bincount(gsp4.traces(F, g), minlength=3)
    assert stats.chisquare(obs, exact / exact.sum() * obs.sum()).pvalue > 1e-3


def test_group_point_checks_similitude():
    F = field(5)
    g = gsp4.borel_element(F, 1, 1, 4)
    gsp4.GroupPoint((g,), 2, weight_exponent=2)
    with pytest.raises(ValueError):
        gsp4.GroupPoint((g,), 2, weight_exponent=1)


def test_similitude_of_product_ring():
    F5, F25 = field(5), field(5, 2)
    g1 = gsp4.borel_element(F5, 1, 2, 3)
    assert gsp4.similitude_of([g1.array, np.eye(4, dtype=np.int64)], [F5, F25]) == (3, 1)
    assert gsp4.similitude_of(np.ones((4, 4), dtype=np.int64), F5) is None
