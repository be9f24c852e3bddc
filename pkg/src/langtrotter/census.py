"""Exact cardinalities of the Borel-type subsets of G(F_l) and their growth.

All counts are of pairs (g, nu) in G(F_l) = {(g, nu) : simil(g) = nu^c in
every factor of O_F (x) F_l}, where c is the weight exponent.  A split ring
O_F (x) F_l = prod_i F_{q_i} is modeled by a :class:`SplittingType`.

Closed forms (per nu, per factor F_q, with s = nu^c):

* upper-triangular members with similitude s: (q-1)^2 q^4
* unipotent upper-triangular members: q^4 (only s = 1)
* members with diagonal (d, d, d, d): q^4 #{d : d^2 = s}

The exhaustive slices of :mod:`langtrotter.gsp4` confirm them where the
budget allows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numba
import numpy as np

from . import gsp4
from .ffield import GF, Poly, field, splits_completely_nonzero
from .gsp4 import SplittingType

SLOPE_PRIMES = (5, 7, 11, 13)


def _splitting(ell: int, splitting) -> SplittingType:
    if splitting is None:
        return SplittingType(ell, (1,))
    if isinstance(splitting, SplittingType):
        if splitting.prime != ell:
            raise ValueError("splitting type is for a different prime")
        return splitting
    return SplittingType(ell, tuple(splitting))


def similitude_image(ell: int, c: int) -> np.ndarray:
    """The subgroup {nu^c} of F_l^x, sorted."""
    nus = np.arange(1, ell)
    return np.unique([pow(int(v), c, ell) for v in nus])


def loglog_slope(ells: Sequence[int], counts: Sequence[float]) -> float:
    """Least-squares slope of log(count) against log(l)."""
    if len(ells) < 4:
        raise ValueError("slopes need at least 4 primes")
    x = np.log(np.asarray(ells, dtype=float))
    y = np.log(np.asarray(counts, dtype=float))
    return float(np.polyfit(x, y, 1)[0])


# ---------------------------------------------------------------------------
# Borel and unipotent slices


@dataclass(frozen=True)
class BorelCount:
    exact: int
    predicted_order: int
    image_count: int
    exhaustive: int | None = None


def _upper_by_similitude(ell: int) -> dict[int, int]:
    hist: dict[int, int] = {}
    for _, nus in gsp4.enumerate_arrays("upper", ell):
        vals, cnt = np.unique(nus, return_counts=True)
        for v, c in zip(vals, cnt):
            hist[int(v)] = hist.get(int(v), 0) + int(c)
    return hist


def count_borel(ell: int, splitting=None, weight_exponent: int = 1, verify: bool = True) -> BorelCount:
    """|B_l| counted as pairs (g, nu); the similitude-image count alongside.

    ``exact`` sums over all nu in F_l^x.  ``image_count`` counts distinct
    matrices g, i.e. one fiber per value in the image of nu -> nu^c; the two
    agree iff gcd(c, l-1) = 1.
    """
    st = _splitting(ell, splitting)
    if ell > 13 or st.n > 2:
        raise gsp4.BudgetExceeded("budget exceeded: count_borel supports l <= 13, n <= 2")
    per_nu = math.prod((q - 1) ** 2 * q**4 for q in st.sizes)
    exact = (ell - 1) * per_nu
    image = len(similitude_image(ell, weight_exponent)) * per_nu
    exhaustive = None
    if verify and ell <= 7 and st.n == 1:
        hist = _upper_by_similitude(ell)
        exhaustive = sum(hist.get(pow(nu, weight_exponent, ell), 0) for nu in range(1, ell))
        if exhaustive != exact:
            raise ArithmeticError(f"Borel count mismatch at l={ell}: {exhaustive} != {exact}")
    return BorelCount(exact, ell ** (6 * st.n + 1), image, exhaustive)


def borel_per_similitude_exhaustive(ell: int) -> dict[int, int]:
    """Upper-triangular members of GSp4(F_l) grouped by similitude."""
    return _upper_by_similitude(ell)


def count_unipotent(ell: int, splitting=None, verify: bool = True) -> int:
    st = _splitting(ell, splitting)
    if ell > 13 or st.n > 2:
        raise gsp4.BudgetExceeded("budget exceeded: count_unipotent supports l <= 13, n <= 2")
    exact = math.prod(q**4 for q in st.sizes)
    if verify and st.n == 1:
        got = gsp4.count_slice("unipotent", ell)
        if got != exact:
            raise ArithmeticError(f"unipotent count mismatch at l={ell}")
    return exact


# ---------------------------------------------------------------------------
# diagonal trace slices


def _torus_trace_counts(F: GF, s: int) -> np.ndarray:
    """hist[t] = #{(x, y) in (F^x)^2 : x + y + s/y + s/x = t}."""
    u = F.units()
    inv = F.inverse_table()
    x = u[:, None]
    y = u[None, :]
    sx = F.mul(s, inv[x])
    sy = F.mul(s, inv[y])
    tr = F.add(F.add(x, y), F.add(sx, sy))
    return np.bincount(tr.ravel(), minlength=F.q)


def _as_factor_values(a, st: SplittingType) -> tuple[int, ...]:
    if isinstance(a, (int, np.integer)):
        return tuple(int(a) % st.prime for _ in st.residue_degrees)
    a = tuple(a)
    if len(a) != len(st.residue_degrees):
        raise ValueError("need one residue per factor of O_F (x) F_l")
    out = []
    for v, F in zip(a, st.fields()):
        if isinstance(v, (tuple, list)):
            out.append(F.encode(v))
        else:
            out.append(int(v) % F.q)
    return tuple(out)


@dataclass(frozen=True)
class SliceCount:
    exact: int
    per_nu: dict[int, int]


def count_diagonal_trace_slice(ell: int, splitting=None, a=0, weight_exponent: int = 1) -> SliceCount:
    """|C-bar(a, l)|: diagonal pairs (g, nu) of G(F_l) with trace a."""
    st = _splitting(ell, splitting)
    avals = _as_factor_values(a, st)
    fields = st.fields()
    per_nu = {}
    cache: dict[tuple, np.ndarray] = {}
    for nu in range(1, ell):
        s = pow(nu, weight_exponent, ell)
        prod = 1
        for F, av in zip(fields, avals):
            key = (F.q, s)
            if key not in cache:
                cache[key] = _torus_trace_counts(F, s)
            prod *= int(cache[key][av])
        per_nu[nu] = prod
    return SliceCount(sum(per_nu.values()), per_nu)


# ---------------------------------------------------------------------------
# H and the torus trace-zero sets


def _scalar_pairs(st: SplittingType, c: int) -> int:
    """|H_l / U_l| = #{(d, nu) : d_i^2 = nu^c in each factor}."""
    total = 0
    for nu in range(1, st.prime):
        s = pow(nu, c, st.prime)
        prod = 1
        for F in st.fields():
            u = F.units()
            prod *= int(np.count_nonzero(F.mul(u, u) == s))
        total += prod
    return total


@dataclass(frozen=True)
class Card2Count:
    H: int
    Cbar0: int
    trace_zero_torus: int
    H_exhaustive: int | None = None


def count_card2_sets(ell: int, splitting=None, weight_exponent: int = 1, verify: bool = True) -> Card2Count:
    """(|H_l|, |C-bar(0, l)|).

    C-bar(0, l) is the image of the trace-zero Borel pairs in B_l / H_l.
    B/H is the diagonal torus modulo scalar pairs, which act freely on the
    trace-zero diagonal pairs, so the image has exactly
    (#trace-zero torus pairs) / |H/U| elements.
    """
    st = _splitting(ell, splitting)
    if ell > 13 or st.n > 2:
        raise gsp4.BudgetExceeded("budget exceeded: count_card2_sets supports l <= 13, n <= 2")
    c = weight_exponent
    scal = _scalar_pairs(st, c)
    H = math.prod(q**4 for q in st.sizes) * scal
    tz = count_diagonal_trace_slice(ell, st, 0, c).exact
    if tz % scal:
        raise ArithmeticError("scalar action on trace-zero torus is not free")
    exhaustive = None
    if verify and ell <= 5 and st.n == 1:
        # a matrix g pairs with every nu whose c-th power is simil(g)
        mult = np.zeros(ell, dtype=np.int64)
        for nu in range(1, ell):
            mult[pow(nu, c, ell)] += 1
        exhaustive = 0
        for mats, nus in gsp4.enumerate_arrays("upper", ell):
            d = mats[:, 0, 0]
            eq = (mats[:, 1, 1] == d) & (mats[:, 2, 2] == d) & (mats[:, 3, 3] == d)
            exhaustive += int(mult[nus[eq]].sum())
        if exhaustive != H:
            raise ArithmeticError(f"H count mismatch at l={ell}: {exhaustive} != {H}")
    return Card2Count(H, tz // scal, tz, exhaustive)


# ---------------------------------------------------------------------------
# twisted trace zero on the cosets diag(1,1,b,b) G-bar


@dataclass(frozen=True)
class CosetCount:
    b: tuple[int, ...]
    count: float
    sigma: float
    exhaustive: bool
    samples: int = 0


def _twisted_trace(F: GF, M: np.ndarray, b: int) -> np.ndarray:
    return F.add(F.add(M[:, 0, 0], M[:, 1, 1]), F.mul(b, F.add(M[:, 2, 2], M[:, 3, 3])))


def gbar_order(st: SplittingType, c: int) -> int:
    return len(similitude_image(st.prime, c)) * math.prod(gsp4.sp4_order(q) for q in st.sizes)


def count_coset_trace_zero(
    ell: int,
    splitting=None,
    b=1,
    weight_exponent: int = 1,
    samples: int = 10**6,
    seed: int = 0,
) -> CosetCount:
    """#{g in G-bar_l : g11 + g22 + b (g33 + g44) = 0}.

    G-bar_l is the set of g in GSp4(O_F (x) F_l) whose similitude is a c-th
    power in F_l^x.  Exhaustive for l = 3, n = 1; otherwise a uniform
    Monte-Carlo estimate (per factor, the count factorizes over the common
    similitude mu).
    """
    st = _splitting(ell, splitting)
    bvals = _as_factor_values(b, st)
    if any(v == 0 for v in bvals):
        raise ValueError("b must be a unit")
    image = similitude_image(ell, weight_exponent)
    if ell == 3 and st.n == 1:
        F = field(3)
        total = 0
        for mats, nus in gsp4.enumerate_arrays("gsp4", 3):
            keep = np.isin(nus, image)
            total += int(np.count_nonzero(_twisted_trace(F, mats[keep], bvals[0]) == 0))
        return CosetCount(bvals, float(total), 0.0, True)
    rng = np.random.default_rng(seed)
    # per mu, per factor: fraction of Sp4-coset elements with twisted trace zero
    est = 0.0
    var = 0.0
    per_mu = max(1, samples // len(image))
    for mu in image:
        prod_mean = 1.0
        prod_var_terms = []
        for F, bv in zip(st.fields(), bvals):
            hits = 0
            done = 0
            while done < per_mu:
                n = min(1 << 17, per_mu - done)
                g, _ = gsp4.random_gsp4(F, n, rng, [int(mu)])
                hits += int(np.count_nonzero(_twisted_trace(F, g, bv) == 0))
                done += n
            frac = hits / per_mu
            size = gsp4.sp4_order(F.q)
            prod_var_terms.append((frac * size, size**2 * frac * (1 - frac) / per_mu))
            prod_mean *= frac * size
        est += prod_mean
        # delta method for a product of independent estimates
        rel = sum(v / m**2 for m, v in prod_var_terms if m > 0)
        var += prod_mean**2 * rel
    return CosetCount(bvals, est, math.sqrt(var), False, per_mu * len(image))


# ---------------------------------------------------------------------------
# centralizer dimension


def _rref_mod_p(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = A.copy() % p
    rows, cols = A.shape
    piv = []
    r = 0
    for c in range(cols):
        nz = np.nonzero(A[r:, c])[0]
        if not len(nz):
            continue
        i = r + nz[0]
        A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        for j in range(rows):
            if j != r and A[j, c]:
                A[j] = (A[j] - A[j, c] * A[r]) % p
        piv.append(c)
        r += 1
        if r == rows:
            break
    return A[:r], piv


def nullspace_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (rows) of the right nullspace of A over F_p."""
    R, piv = _rref_mod_p(A, p)
    n = A.shape[1]
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = (-R[i, f]) % p
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), n)


def sp4_basis(p: int) -> np.ndarray:
    """Basis of sp4(F_p) = {X : X^t J + J X = 0}, shape (10, 4, 4), in RREF."""
    Jm = gsp4.J % p
    rows = []
    for k in range(16):
        E = np.zeros(16, dtype=np.int64)
        E[k] = 1
        X = E.reshape(4, 4)
        rows.append(((X.T @ Jm + Jm @ X) % p).ravel())
    L = np.array(rows).T  # column k = image of E_k
    N = nullspace_mod_p(L, p)
    R, _ = _rref_mod_p(N, p)
    if len(R) != 10:
        raise ArithmeticError("sp4 should be 10-dimensional")
    return R.reshape(10, 4, 4)


def rank_mod_p_batch(M: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a batch of matrices (N, rows, cols) over F_p."""
    M = M.copy() % p
    N, R, C = M.shape
    inv = field(p).inverse_table()
    rank = np.zeros(N, dtype=np.int64)
    rows = np.arange(R)
    for c in range(C):
        cand = (M[:, :, c] != 0) & (rows[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        idx = np.nonzero(has)[0]
        piv = np.argmax(cand[idx], axis=1)
        tgt = rank[idx]
        a = M[idx, piv].copy()
        M[idx, piv] = M[idx, tgt]
        M[idx, tgt] = a
        prow = M[idx, tgt] * inv[M[idx, tgt, c]][:, None] % p
        M[idx, tgt] = prow
        factors = M[idx, :, c] * (rows[None, :] > tgt[:, None])
        M[idx] = (M[idx] - factors[:, :, None] * prow[:, None, :]) % p
        rank[idx] += 1
    return rank


@numba.njit(cache=True)
def _orbit_dims_kernel(S, Sinv, basis, pivots, p, inv):
    n = S.shape[0]
    out = np.empty(n, dtype=np.int64)
    A = np.empty((10, 10), dtype=np.int64)
    T = np.empty((4, 4), dtype=np.int64)
    for idx in range(n):
        s = S[idx]
        si = Sinv[idx]
        for k in range(10):
            X = basis[k]
            for i in range(4):
                for j in range(4):
                    acc = 0
                    for m in range(4):
                        acc += s[i, m] * X[m, j]
                    T[i, j] = acc % p
            for t in range(10):
                pos = pivots[t]
                i = pos // 4
                j = pos % 4
                acc = 0
                for m in range(4):
                    acc += T[i, m] * si[m, j]
                A[t, k] = (acc - X[i, j]) % p
        rank = 0
        for c in range(10):
            piv = -1
            for r in range(rank, 10):
                if A[r, c] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            for j in range(10):
                tmp = A[rank, j]
                A[rank, j] = A[piv, j]
                A[piv, j] = tmp
            f = inv[A[rank, c]]
            for j in range(10):
                A[rank, j] = A[rank, j] * f % p
            for r in range(rank + 1, 10):
                m = A[r, c]
                if m != 0:
                    for j in range(10):
                        A[r, j] = (A[r, j] - m * A[rank, j]) % p
            rank += 1
        out[idx] = rank
    return out


class CentralizerScanner:
    """Batched centralizer dimensions in sp4 over F_p for members of GSp4.

    For s in GSp4, X commutes with s iff Ad(s)X = X, and Ad(s) preserves
    sp4; the kernel of Ad(s) - 1 is computed in the coordinates given by
    the pivot entries of the reduced sp4 basis.
    """

    def __init__(self, p: int):
        self.p = p
        self.F = field(p)
        self.basis = sp4_basis(p)
        flat = self.basis.reshape(10, 16)
        self.pivots = np.array([int(np.nonzero(r)[0][0]) for r in flat], dtype=np.int64)
        self._inv = self.F.inverse_table()

    def dimensions(self, S: np.ndarray, nus: np.ndarray | None = None) -> np.ndarray:
        S = np.ascontiguousarray(S, dtype=np.int64)
        if nus is None:
            nus = gsp4.similitudes(self.F, S)
            if np.any(nus < 0):
                raise ValueError("not all matrices are members")
        Sinv = np.ascontiguousarray(gsp4.inverses(self.F, S, nus))
        orbit = _orbit_dims_kernel(S, Sinv, self.basis, self.pivots, self.p, self._inv)
        return 10 - orbit


def centralizer_dimension(s: gsp4.GSpMatrix) -> int:
    """dim over F_l of {X in sp4 : Xs = sX} (orbit dimension is 10 minus this)."""
    if s.gf.k != 1:
        raise ValueError("centralizer_dimension expects a prime field")
    p = s.gf.p
    basis = sp4_basis(p)
    S = s.array
    cols = [((X @ S - S @ X) % p).ravel() for X in basis]
    A = np.array(cols).T
    R, _ = _rref_mod_p(A, p)
    return 10 - len(R)


@dataclass(frozen=True)
class OrbitScan:
    ell: int
    examined: int
    min_orbit_dim: int
    violations: int
    exhaustive: bool


def min_orbit_dimension_trace_zero(
    ell: int, weight_exponent: int = 1, samples: int = 10**6, seed: int = 0, floor: int = 4
) -> OrbitScan:
    """Minimum of 10 - dim Z(s) over trace-zero s with simil(s) a c-th power."""
    F = field(ell)
    image = similitude_image(ell, weight_exponent)
    scanner = CentralizerScanner(ell)
    best = 10
    viol = 0
    seen = 0
    if ell == 3:
        for mats, nus in gsp4.enumerate_arrays("gsp4", 3):
            keep = np.isin(nus, image) & (gsp4.traces(F, mats) == 0)
            dims = scanner.dimensions(mats[keep], nus[keep])
            orbit = 10 - dims
            best = min(best, int(orbit.min()))
            viol += int(np.count_nonzero(orbit < floor))
            seen += int(keep.sum())
        return OrbitScan(ell, seen, best, viol, True)
    rng = np.random.default_rng(seed)
    while seen < samples:
        n = min(1 << 17, 8 * (samples - seen))
        g, mu = gsp4.random_gsp4(F, n, rng, image)
        keep = gsp4.traces(F, g) == 0
        g, mu = g[keep][: samples - seen], mu[keep][: samples - seen]
        orbit = 10 - scanner.dimensions(g, mu)
        best = min(best, int(orbit.min()))
        viol += int(np.count_nonzero(orbit < floor))
        seen += len(g)
    return OrbitScan(ell, seen, best, viol, False)


# ---------------------------------------------------------------------------
# C(a, l) directly (l = 3 only)


def count_split_trace_slice_l3(weight_exponent: int = 1) -> dict[int, int]:
    """|C(a, 3)| for each a: pairs with trace a and all eigenvalues in F_3^x."""
    F = field(3)
    mult = np.zeros(3, dtype=np.int64)
    for nu in (1, 2):
        mult[pow(nu, weight_exponent, 3)] += 1
    counts = {0: 0, 1: 0, 2: 0}
    verdict: dict[tuple, bool] = {}
    for mats, nus in gsp4.enumerate_arrays("gsp4", 3):
        polys = gsp4.charpoly_batch(F, mats)
        keys, inverse = np.unique(polys, axis=0, return_inverse=True)
        ok = np.array([
            verdict.setdefault(tuple(k), splits_completely_nonzero(Poly(list(k) + [1], F)))
            for k in keys
        ])
        good = ok[inverse.ravel()]
        tr = gsp4.traces(F, mats)
        for a in counts:
            counts[a] += int(mult[nus[good & (tr == a)]].sum())
    return counts


# ---------------------------------------------------------------------------
# normality checks at l = 3


def _keys(M: np.ndarray, q: int) -> np.ndarray:
    w = q ** np.arange(16, dtype=np.int64)
    return M.reshape(len(M), 16) @ w


def check_normality_l3() -> tuple[bool, bool]:
    """(U.B = B, H.(trace-zero in B) within trace-zero in B), exhaustively at l = 3."""
    F = field(3)
    B = np.concatenate([m for m, _ in gsp4.enumerate_arrays("upper", 3)])
    U = np.concatenate([m for m, _ in gsp4.enumerate_arrays("unipotent", 3)])
    bkeys = set(_keys(B, 3).tolist())
    prod = gsp4.matmul(F, U[:, None], B[None, :]).reshape(-1, 4, 4)
    pk = set(_keys(prod, 3).tolist())
    ub = pk == bkeys
    d = B[:, 0, 0]
    Hmask = (B[:, 1, 1] == d) & (B[:, 2, 2] == d) & (B[:, 3, 3] == d)
    H = B[Hmask]
    T0 = B[gsp4.traces(F, B) == 0]
    prod = gsp4.matmul(F, H[:, None], T0[None, :]).reshape(-1, 4, 4)
    t0keys = set(_keys(T0, 3).tolist())
    hc = set(_keys(prod, 3).tolist()) <= t0keys
    return ub, hc


# ---------------------------------------------------------------------------
# reports


SET_TARGETS = {
    "borel": lambda n: 6 * n + 1,
    "unipotent": lambda n: 4 * n,
    "H": lambda n: 5 * n,
    "Cbar_a": lambda n: n + 1,
    "Cbar_0": lambda n: 1,
}


@dataclass
class CensusReport:
    prime: int
    splitting: SplittingType
    exact_counts: dict[str, int]
    formula_counts: dict[str, int] = dc_field(default_factory=dict)
    slopes: dict[str, float] = dc_field(default_factory=dict)
    slope_targets: dict[str, int] = dc_field(default_factory=dict)

    def __post_init__(self):
        if any(v < 0 for v in self.exact_counts.values()):
            raise ValueError("negative count")

    CSV_HEADER = ("set_name", "ell", "n", "exact_count", "formula_count", "slope", "slope_target")

    def rows(self) -> list[tuple]:
        out = []
        for name, val in self.exact_counts.items():
            slope = self.slopes.get(name)
            out.append(
                (
                    name,
                    self.prime,
                    self.splitting.n,
                    val,
                    self.formula_counts.get(name, ""),
                    "" if slope is None else f"{slope:.6f}",
                    self.slope_targets.get(name, ""),
                )
            )
        return out

    def summary(self) -> str:
        lines = [f"census at l={self.prime}, residue degrees {self.splitting.residue_degrees}"]
        for name, ell, n, exact, formula, slope, target in self.rows():
            extra = f" slope {slope} (target {target})" if slope else ""
            agree = "" if formula == "" else (" [agrees]" if formula == exact else " [MISMATCH]")
            lines.append(f"  {name:10s} {exact}{agree}{extra}")
        return "\n".join(lines)


def slope_sweep(residue_degrees=(1,), a=1, weight_exponent: int = 1, primes=SLOPE_PRIMES) -> dict[str, float]:
    """Fitted log-log slopes of the five sets over ``primes``."""
    series: dict[str, list[int]] = {k: [] for k in SET_TARGETS}
    for ell in primes:
        st = SplittingType(ell, tuple(residue_degrees))
        series["borel"].append(count_borel(ell, st, weight_exponent, verify=False).exact)
        series["unipotent"].append(count_unipotent(ell, st, verify=False))
        c2 = count_card2_sets(ell, st, weight_exponent, verify=False)
        series["H"].append(c2.H)
        series["Cbar_0"].append(c2.Cbar0)
        series["Cbar_a"].append(count_diagonal_trace_slice(ell, st, a, weight_exponent).exact)
    return {k: loglog_slope(primes, v) for k, v in series.items()}


def census_report(ell: int, residue_degrees=(1,), a=1, weight_exponent: int = 1, with_slopes: bool = True) -> CensusReport:
    st = SplittingType(ell, tuple(residue_degrees))
    verify = ell <= 7 and st.n == 1
    b = count_borel(ell, st, weight_exponent, verify=verify)
    u = count_unipotent(ell, st, verify=st.n == 1)
    c2 = count_card2_sets(ell, st, weight_exponent, verify=ell <= 5 and st.n == 1)
    ca = count_diagonal_trace_slice(ell, st, a, weight_exponent).exact
    exact = {
        "borel": b.exhaustive if b.exhaustive is not None else b.exact,
        "borel_image": b.image_count,
        "unipotent": u,
        "H": c2.H_exhaustive if c2.H_exhaustive is not None else c2.H,
        "Cbar_a": ca,
        "Cbar_0": c2.Cbar0,
    }
    formula = {"borel": b.exact, "unipotent": u, "H": c2.H}
    n = st.n
    report = CensusReport(ell, st, exact, formula)
    if with_slopes:
        report.slopes = slope_sweep(residue_degrees, a, weight_exponent)
        report.slope_targets = {k: f(n) for k, f in SET_TARGETS.items()}
    return report
