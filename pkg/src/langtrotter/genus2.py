"""Frobenius data of genus-2 curves y^2 = f(x), deg f in {5, 6}.

For a good prime p the quartic
``X^4 - a_p X^3 + b_p X^2 - a_p p X + p^2`` is recovered from point counts:
``a_p = p + 1 - N_1`` and ``b_p = (a_p^2 - s_2) / 2`` with
``s_2 = p^2 + 1 - N_2``.

N_1 is always counted directly (quadratic character of f over F_p).  N_2 is
an O(p^2) count, so above ``DIRECT_LIMIT`` the record instead takes b_p mod p
from the Cartier-Manin matrix and selects among the Weil-admissible lifts the
unique one whose #J(F_p) kills random points of the Jacobian (and of its
quadratic twist).  The direct count remains the fallback.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numba
import numpy as np
from sympy import primerange

from . import _cantor
from .ffield import discriminant, int_poly

DIRECT_LIMIT = 300


class BadPrime(ValueError):
    """p divides 2 * disc(f) * lc(f)."""


class ArithmeticInconsistency(ArithmeticError):
    """Point counts violate an identity they must satisfy."""


@dataclass(frozen=True)
class HyperellipticCurve:
    f_coeffs: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        coeffs = [int(c) for c in self.f_coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "f_coeffs", tuple(coeffs))
        if len(coeffs) - 1 not in (5, 6):
            raise ValueError("deg f must be 5 or 6")
        if self.disc == 0:
            raise ValueError("f has a repeated root (singular model)")

    @property
    def degree(self) -> int:
        return len(self.f_coeffs) - 1

    @property
    def lc(self) -> int:
        return self.f_coeffs[-1]

    @cached_property
    def disc(self) -> int:
        return int(discriminant(int_poly(self.f_coeffs)))

    def is_good(self, p: int) -> bool:
        return p > 2 and (2 * self.disc * self.lc) % p != 0

    def reduce(self, p: int) -> np.ndarray:
        return np.array([c % p for c in self.f_coeffs], dtype=np.int64)

    @classmethod
    def parse(cls, line: str) -> HyperellipticCurve:
        """Parse ``label : c0, c1, ...`` (coefficients lowest degree first)."""
        if ":" not in line:
            raise ValueError(f"malformed curve line: {line!r}")
        label, coeffs = line.split(":", 1)
        label = label.strip()
        if not label:
            raise ValueError("empty curve label")
        try:
            vals = tuple(int(c) for c in coeffs.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed coefficients in {line!r}") from exc
        return cls(vals, label)

    def to_line(self) -> str:
        return f"{self.label} : {', '.join(str(c) for c in self.f_coeffs)}"


def load_curves(path) -> list[HyperellipticCurve]:
    out = []
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(HyperellipticCurve.parse(line))
    labels = [c.label for c in out]
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate curve labels")
    return out


# ---------------------------------------------------------------------------
# point counts


@numba.njit(cache=True)
def _affine_count_fp(f, p):
    sq = np.zeros(p, dtype=np.int8)
    for y in range(p):
        sq[(y * y) % p] = 1
    # forward differences of f at 0, 1, ..., d: f(x) is then updated by additions only
    d = f.shape[0] - 1
    diff = np.zeros(d + 1, dtype=np.int64)
    for x in range(d + 1):
        v = 0
        for i in range(d, -1, -1):
            v = (v * x + f[i]) % p
        diff[x] = v
    for j in range(1, d + 1):
        for x in range(d, j - 1, -1):
            diff[x] = (diff[x] - diff[x - 1]) % p
    total = 0
    for x in range(p):
        v = diff[0]
        if v == 0:
            total += 1
        elif sq[v]:
            total += 2
        for j in range(d):
            t = diff[j] + diff[j + 1]
            diff[j] = t - p if t >= p else t
    return total


@numba.njit(cache=True)
def _affine_count_fp2(f, p):
    """Affine points over F_{p^2}, by norms over the irreducible quadratics."""
    chi = np.full(p, -1, dtype=np.int64)
    for y in range(p):
        chi[(y * y) % p] = 1
    chi[0] = 0
    total = 0
    for x in range(p):
        v = 0
        for i in range(f.shape[0] - 1, -1, -1):
            v = (v * x + f[i]) % p
        # every nonzero value of F_p is a square in F_{p^2}
        total += 1 if v == 0 else 2
    for t in range(p):
        for n in range(p):
            if chi[(t * t - 4 * n) % p] != -1:
                continue
            # evaluate f at a root x of X^2 - t X + n as A + B x
            A = 0
            B = 0
            for i in range(f.shape[0] - 1, -1, -1):
                A, B = (f[i] - B * n) % p, (A + B * t) % p
            norm = (A * A + A * B % p * t + B * B % p * n) % p
            total += 2 * (1 + chi[norm])
    return total


def count_points(curve: HyperellipticCurve, p: int, k: int = 1) -> int:
    """#C(F_{p^k}) on the smooth model, points at infinity included."""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    if not curve.is_good(p):
        raise BadPrime(f"bad prime {p} for {curve.label or curve.f_coeffs}")
    f = curve.reduce(p)
    if curve.degree == 5:
        infinity = 1
    elif k == 2:
        infinity = 2
    else:
        lc = curve.lc % p
        infinity = 2 if pow(lc, (p - 1) // 2, p) == 1 else 0
    affine = _affine_count_fp(f, p) if k == 1 else _affine_count_fp2(f, p)
    return affine + infinity


# ---------------------------------------------------------------------------
# Cartier-Manin matrix


@numba.njit(cache=True)
def _power_coeffs(g, p, m, kmax):
    """Coefficients h_0..h_kmax of g^m mod p, needs g[0] != 0 and kmax < p."""
    d = g.shape[0] - 1
    h = np.zeros(kmax + 1, dtype=np.int64)
    inv = np.ones(kmax + 2, dtype=np.int64)
    for k in range(2, kmax + 1):
        inv[k] = (p - (p // k) * inv[p % k] % p) % p
    g0inv = 1
    base = g[0] % p
    e = p - 2
    while e:
        if e & 1:
            g0inv = g0inv * base % p
        base = base * base % p
        e >>= 1
    h0 = 1
    base = g[0] % p
    e = m
    while e:
        if e & 1:
            h0 = h0 * base % p
        base = base * base % p
        e >>= 1
    h[0] = h0
    # below 10^6 the six-term sum of products < p^3 stays inside int64
    lazy = p < 1_000_000
    for k in range(1, kmax + 1):
        acc = 0
        top = d if d < k else k
        for i in range(1, top + 1):
            coef = ((m + 1) * i - k) % p
            if lazy:
                acc += coef * (g[i] * h[k - i] % p)
            else:
                acc = (acc + coef * g[i] % p * h[k - i]) % p
        h[k] = acc % p * inv[k] % p * g0inv % p
    return h


def _shift(f: Sequence[int], s: int, p: int) -> list[int]:
    """Coefficients of f(x + s) mod p."""
    out = [0] * len(f)
    for i, c in enumerate(f):
        for j in range(i + 1):
            out[j] = (out[j] + c * math.comb(i, j) * pow(s, i - j, p)) % p
    return out


def cartier_manin(curve: HyperellipticCurve, p: int) -> np.ndarray:
    """W = [[c_{p-1}, c_{p-2}], [c_{2p-1}, c_{2p-2}]], c_j the coefficients of f^{(p-1)/2}.

    Frobenius satisfies P(X) = X^2 (X^2 - tr(W) X + det(W)) mod p.
    """
    if not curve.is_good(p):
        raise BadPrime(f"bad prime {p}")
    if p < 7:
        raise ValueError("Cartier-Manin path needs p >= 7")
    f = [int(c) % p for c in curve.f_coeffs]
    s = 0
    while sum(c * pow(s, i, p) for i, c in enumerate(f)) % p == 0:
        s += 1
    g = _shift(f, s, p)
    D = curve.degree
    m = (p - 1) // 2
    low = _power_coeffs(np.array(g, dtype=np.int64), p, m, p - 1)
    rev = np.array(list(reversed(g)), dtype=np.int64)
    # c_j(g^m) = c_{Dm - j}(rev^m)
    j_hi = (2 * p - 1, 2 * p - 2)
    idx = [D * m - j for j in j_hi]
    if min(idx) < 0:
        hi = [0, 0]
    else:
        high = _power_coeffs(rev, p, m, max(idx))
        hi = [int(high[i]) for i in idx]
    return np.array([[low[p - 1], low[p - 2]], [hi[0], hi[1]]], dtype=np.int64)


# ---------------------------------------------------------------------------
# records


@dataclass(frozen=True)
class FrobeniusRecord:
    p: int
    a_p: int
    b_p: int
    weight_exponent: int = 1

    def __post_init__(self):
        p, a, b = self.p, self.a_p, self.b_p
        if self.weight_exponent == 1:
            if a * a > 16 * p or abs(b) > 6 * p:
                raise ArithmeticInconsistency(f"Weil bound violated at p={p}: a={a}, b={b}")

    @property
    def charpoly(self) -> tuple[int, ...]:
        """Coefficients constant first, monic quartic."""
        pc = self.p**self.weight_exponent
        return (pc * pc, -self.a_p * pc, self.b_p, -self.a_p, 1)

    def frobenius_roots(self) -> np.ndarray:
        """Complex roots via the real-quadratic factorization (c = 1)."""
        return _weil_roots(self.p, self.a_p, self.b_p)

    def csv_row(self) -> tuple[int, ...]:
        return (self.p, self.a_p, self.b_p) + self.charpoly[:4]


RECORD_HEADER = ("p", "a_p", "b_p", "c0", "c1", "c2", "c3")


def _weil_roots(p: int, a: int, b: int) -> np.ndarray:
    # P = (X^2 - t1 X + p)(X^2 - t2 X + p) with t1 + t2 = a, t1 t2 = b - 2p
    disc = a * a - 4 * (b - 2 * p)
    sq = np.sqrt(complex(disc))
    out = []
    for t in ((a + sq) / 2, (a - sq) / 2):
        r = np.sqrt(t * t - 4 * p)
        out += [(t + r) / 2, (t - r) / 2]
    return np.array(out)


def weil_admissible(p: int, a: int, b: int) -> bool:
    """Exact test that all roots of the quartic have absolute value sqrt(p)."""
    disc = a * a - 4 * (b - 2 * p)
    if disc < 0:
        return False
    # roots t of T^2 - a T + (b - 2p) must satisfy |t| <= 2 sqrt(p)
    # max |t| = (|a| + sqrt(disc)) / 2 <= 2 sqrt(p)  <=>  sqrt(disc) <= 4 sqrt(p) - |a|
    if a * a > 16 * p:
        return False
    # sqrt(disc) <= 4 sqrt(p) - |a|  <=>  disc <= 16p - 8|a| sqrt(p) + a^2
    # <=> 8|a| sqrt(p) <= 16p + a^2 - disc
    lhs_sq = 64 * a * a * p
    r = 16 * p + a * a - disc
    return r >= 0 and lhs_sq <= r * r


def roots_on_circle(rec: FrobeniusRecord, tol: float = 1e-9) -> bool:
    target = math.sqrt(rec.p)
    return bool(np.all(np.abs(np.abs(rec.frobenius_roots()) - target) <= tol * max(1.0, target)))


def _b_candidates(p: int, a: int, b_mod: int) -> list[int]:
    lo = -6 * p
    b0 = lo + ((b_mod - lo) % p)
    return [b for b in range(b0, 6 * p + 1, p) if weil_admissible(p, a, b)]


def _quintic_model(curve: HyperellipticCurve, p: int) -> list[int] | None:
    f = [int(c) % p for c in curve.f_coeffs]
    if curve.degree == 5:
        return f
    # move a rational root to infinity: u^6 f(r + 1/u) has degree 5
    x = np.arange(p, dtype=np.int64)
    vals = np.zeros(p, dtype=np.int64)
    for c in reversed(f):
        vals = (vals * x + c) % p
    roots = np.nonzero(vals == 0)[0]
    if not len(roots):
        return None
    r = int(roots[0])
    out = [0] * 7
    for k, fk in enumerate(f):
        # f_k (r u + 1)^k u^(6 - k)
        for j in range(k + 1):
            out[6 - k + j] = (out[6 - k + j] + fk * math.comb(k, j) * pow(r, j, p)) % p
    if out[6] != 0:
        raise ArithmeticInconsistency("root transform failed")  # pragma: no cover
    return out[:6]


def _nonsquare(p: int) -> int:
    d = 2
    while pow(d, (p - 1) // 2, p) == 1:
        d += 1
    return d


def _jacobian_order_is_even(f5: list[int], p: int) -> bool:
    """#J(F_p) is even iff J has a rational 2-torsion point iff the quintic is reducible."""
    f = _cantor._monic(f5, p)
    x = [0, 1]

    def powmod(base, e):
        out = [1]
        while e:
            if e & 1:
                out = _cantor._divmod(_cantor._mul(out, base, p), f, p)[1]
            base = _cantor._divmod(_cantor._mul(base, base, p), f, p)[1]
            e >>= 1
        return out

    xp = powmod(x, p)
    xp2 = powmod(xp, p)
    for h in (xp, xp2):
        g = _cantor._xgcd(f, _cantor._sub(h, x, p), p)[0] if _cantor._sub(h, x, p) else f
        if len(g) > 1:
            return True
    return False


def _select_by_jacobian(curve, p, a, cands, rng, rounds=12):
    f5 = _quintic_model(curve, p)
    if f5 is None:
        return None
    parity = 0 if _jacobian_order_is_even(f5, p) else 1
    alive = [b for b in cands if (1 - a + b - a * p + p * p) % 2 == parity]
    if len(alive) <= 1:
        return alive[0] if alive else None
    jac = _cantor.Jacobian(_cantor.monic_quintic_model(f5, p), p)
    twist = _cantor.Jacobian(_cantor.monic_quintic_model(f5, p, _nonsquare(p)), p)
    for r in range(rounds):
        if len(alive) <= 1:
            break
        use_twist = r % 2 == 1
        J = twist if use_twist else jac
        D = J.random_element(rng)
        orders = [(1 + a + b + a * p + p * p) if use_twist else (1 - a + b - a * p + p * p) for b in alive]
        base = J.mul(orders[0], D)
        step = J.mul(p, D)
        keep = []
        cur = base
        # orders differ by consecutive multiples of p
        prev_b = alive[0]
        for b, order in zip(alive, orders):
            while prev_b < b:
                cur = J.add(cur, step)
                prev_b += p
            if cur == J.ZERO:
                keep.append(b)
        alive = keep
    return alive[0] if len(alive) == 1 else None


def _b_from_direct(curve, p, a) -> int:
    n2 = count_points(curve, p, 2)
    s2 = p * p + 1 - n2
    twice = a * a - s2
    if twice % 2:
        raise ArithmeticInconsistency(f"non-integral b_p at p={p}")
    return twice // 2


def frobenius_record(curve: HyperellipticCurve, p: int, method: str = "auto", seed: int = 0) -> FrobeniusRecord:
    """(a_p, b_p) and the Frobenius quartic at a good prime p.

    ``method`` is ``"direct"`` (count N_2), ``"cartier"`` (Cartier-Manin plus
    Jacobian orders) or ``"auto"`` (direct up to ``DIRECT_LIMIT``).
    """
    if not curve.is_good(p):
        raise BadPrime(f"bad prime {p}")
    n1 = count_points(curve, p, 1)
    a = p + 1 - n1
    if a * a > 16 * p:
        raise ArithmeticInconsistency(f"|a_p| > 4 sqrt(p) at p={p}")
    use_direct = method == "direct" or (method == "auto" and p <= DIRECT_LIMIT) or p < 7
    if use_direct:
        b = _b_from_direct(curve, p, a)
    else:
        W = cartier_manin(curve, p)
        tr = int(W[0, 0] + W[1, 1]) % p
        if tr != a % p:
            raise ArithmeticInconsistency(f"Cartier-Manin trace disagrees with N_1 at p={p}")
        det = int(W[0, 0] * W[1, 1] - W[0, 1] * W[1, 0]) % p
        cands = _b_candidates(p, a, det)
        if not cands:
            raise ArithmeticInconsistency(f"no Weil-admissible b_p at p={p}")
        if len(cands) == 1:
            b = cands[0]
        elif _quintic_model(curve, p) is None:
            # sextic without a rational root: no odd model for the Cantor law
            b = _b_from_direct(curve, p, a)
        else:
            b = _select_by_jacobian(curve, p, a, cands, np.random.default_rng([seed, p]))
        if b is None:
            warnings.warn(f"b_p ambiguous at p={p}; falling back to the F_(p^2) count")
            b = _b_from_direct(curve, p, a)
    rec = FrobeniusRecord(p, a, b)
    if not weil_admissible(p, a, b) or not roots_on_circle(rec):
        raise ArithmeticInconsistency(f"Frobenius roots off the circle at p={p}")
    return rec


def good_primes(curve: HyperellipticCurve, p_max: int, p_min: int = 3) -> tuple[list[int], list[int]]:
    good, bad = [], []
    for p in primerange(max(3, p_min), p_max + 1):
        (good if curve.is_good(p) else bad).append(int(p))
    return good, bad


def frobenius_records(curve: HyperellipticCurve, p_max: int, method: str = "auto", p_min: int = 3) -> list[FrobeniusRecord]:
    good, _ = good_primes(curve, p_max, p_min)
    return [frobenius_record(curve, p, method) for p in good]


def trace_table(curve: HyperellipticCurve, p_max: int) -> list[tuple[int, int]]:
    """(p, a_p) for all good p <= p_max; only N_1 is needed."""
    good, _ = good_primes(curve, p_max)
    return [(p, p + 1 - count_points(curve, p, 1)) for p in good]


# ---------------------------------------------------------------------------
# discriminant growth


@dataclass(frozen=True)
class DiscScan:
    rows: list[tuple[int, float]]
    degenerate: list[int]
    bad: list[int]

    @property
    def max_ratio(self) -> float:
        return max((r for _, r in self.rows), default=float("nan"))


def charpoly_discriminant(rec: FrobeniusRecord) -> int:
    return int(discriminant(int_poly(rec.charpoly)))


def disc_growth_scan(curve: HyperellipticCurve, p_max: int, records: Iterable[FrobeniusRecord] | None = None) -> DiscScan:
    """log|disc(charpoly_p)| / log p for every good p <= p_max."""
    if p_max > 10**5:
        raise ValueError("p_max above the desk budget of 1e5")
    good, bad = good_primes(curve, p_max)
    if records is None:
        records = frobenius_records(curve, p_max)
    by_p = {r.p: r for r in records}
    rows, degenerate = [], []
    for p in good:
        d = charpoly_discriminant(by_p[p])
        if d == 0:
            degenerate.append(p)
        else:
            rows.append((p, math.log(abs(d)) / math.log(p)))
    return DiscScan(rows, degenerate, bad)


FIXED_CURVES = (
    HyperellipticCurve((1, 1, 0, 0, 0, 1), "x5+x+1"),
    HyperellipticCurve((1, -1, 0, 0, 0, 1), "x5-x+1"),
    HyperellipticCurve((3, 1, 2, 0, 0, 1), "x5+2x2+x+3"),
    HyperellipticCurve((1, 2, -1, 0, 3, 1), "x5+3x4-x2+2x+1"),
    HyperellipticCurve((-1, 0, 2, 1, 0, 1), "x5+x3+2x2-1"),
)
