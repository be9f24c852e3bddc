"""Lang-Trotter counts from Frobenius data, and the bound curves they are compared to.

``pi_f(x, a)`` counts good primes p <= x with a_p = a.  ``pi(x, a; l)``
keeps only those p whose Frobenius quartic splits mod l into linear factors
with nonzero roots.  All counting is integer-exact.
"""

from __future__ import annotations

import math
import warnings
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from scipy import optimize
from sympy import isprime, primerange

from .chebotarev import BoundProfile, alpha_value, optimal_ell
from .ffield import poly_mod, splits_completely_nonzero

REPORT_HEADER = ("x", "a", "count", "pi_x_a_l_max", "curve_uncond", "curve_grh")


@dataclass(frozen=True)
class Rec:
    """Minimal record: prime, trace, and optionally the quartic (constant first)."""

    p: int
    a_p: int
    charpoly: tuple[int, ...] | None = None


def _as_rec(r) -> Rec:
    if isinstance(r, Rec):
        return r
    if hasattr(r, "a_p"):
        return Rec(int(r.p), r.a_p, tuple(getattr(r, "charpoly", None) or ()) or None)
    p, a, *rest = r
    return Rec(int(p), a, tuple(rest[0]) if rest else None)


def _normalize(records) -> list[Rec]:
    recs = [_as_rec(r) for r in records]
    ps = [r.p for r in recs]
    if any(b <= a for a, b in zip(ps, ps[1:])):
        raise ValueError("records must be sorted by p with distinct primes")
    return recs


@dataclass(frozen=True)
class LTCount:
    x: float
    a: object
    count: int
    bound_unconditional: float
    bound_grh: float


@dataclass
class LTTable:
    rows: list[LTCount]
    excluded: list[int] = field(default_factory=list)

    @property
    def counts(self) -> list[int]:
        return [r.count for r in self.rows]


def curves(x, n: int, a_zero: bool, epsilon: float = 0.0) -> tuple[float, float]:
    """(x/(log x)^(1+alpha-eps), x^(1-alpha')/(log x)^(1-2 alpha')) at x."""
    u = BoundProfile(n, "unconditional", a_zero, epsilon=epsilon).curve(x)
    g = BoundProfile(n, "grh", a_zero).curve(x)
    return float(u), float(g)


def tabulate_pi_f(records, a, x_grid: Sequence[float], n: int = 1, bad_primes: Iterable[int] = (), epsilon: float = 0.0) -> LTTable:
    """pi_f(x, a) on an increasing grid; primes in ``bad_primes`` are skipped and listed."""
    recs = _normalize(records)
    xs = list(x_grid)
    if any(b <= a_ for a_, b in zip(xs, xs[1:])):
        raise ValueError("x_grid must be increasing")
    bad = set(int(p) for p in bad_primes)
    hits = [r.p for r in recs if r.p not in bad and r.a_p == a]
    excluded = [r.p for r in recs if r.p in bad]
    rows = []
    for x in xs:
        cnt = bisect_right(hits, x)
        if x > 1:
            u, g = curves(x, n, a == 0, epsilon)
        else:
            u = g = float("nan")
        rows.append(LTCount(x, a, cnt, u, g))
    return LTTable(rows, excluded)


def value_distribution(records, x: float, bad_primes: Iterable[int] = ()) -> Counter:
    """a -> pi_f(x, a) over all observed a."""
    bad = set(bad_primes)
    return Counter(r.a_p for r in _normalize(records) if r.p <= x and r.p not in bad)


@lru_cache(maxsize=1 << 16)
def _splits(coeffs: tuple[int, ...], ell: int) -> bool:
    return splits_completely_nonzero(poly_mod(coeffs, ell))


def splits_mod(charpoly: Sequence[int], ell: int) -> bool:
    return _splits(tuple(int(c) % ell for c in charpoly), ell)


@dataclass(frozen=True)
class SplitCount:
    count: int
    raw: int
    excluded: tuple[int, ...]
    scale: int = 1


def pi_x_a_l(records, a, ell: int, x: float, level: int = 1, kernel=None) -> SplitCount:
    """Count p <= x with a_p = a whose quartic splits with nonzero roots mod l.

    With a kernel-field datum only primes passing its split test count, and
    the result is scaled by [K:Q].
    """
    if not isprime(ell):
        raise ValueError("l must be prime")
    if level % ell == 0:
        raise ValueError("l divides the level")
    recs = _normalize(records)
    raw = 0
    excluded = []
    for r in recs:
        if r.p > x:
            break
        if (ell * level) % r.p == 0:
            excluded.append(r.p)
            continue
        if r.a_p != a:
            continue
        if kernel is not None and not kernel.split_test(r.p):
            continue
        if r.charpoly is None:
            raise ValueError(f"record at p={r.p} lacks a characteristic polynomial")
        if splits_mod(r.charpoly, ell):
            raw += 1
    scale = kernel.degree if kernel is not None else 1
    return SplitCount(raw * scale, raw, tuple(excluded), scale)


@dataclass
class MurtyReport:
    x: float
    a: object
    alpha: object
    y: float
    u: float
    interval: tuple[float, float]
    per_ell: dict[int, int]
    pi_f: int
    curve: float
    widened: int = 0

    @property
    def max_count(self) -> int:
        return max(self.per_ell.values())

    @property
    def argmax(self) -> int:
        return max(self.per_ell, key=lambda k: (self.per_ell[k], -k))

    @property
    def ratio(self) -> float:
        return self.max_count / self.pi_f if self.pi_f else 0.0


def interval_length(y: float, x: float, epsilon: float) -> float:
    """u = y^(1/2) (log y)^(1+eps) log(x y)."""
    return math.sqrt(y) * abs(math.log(y)) ** (1 + epsilon) * math.log(x * y)


def murty_interval_report(
    records,
    a,
    x: float,
    epsilon: float = 0.1,
    n: int = 1,
    level: int = 1,
    split_in_F=None,
    min_ell: int = 5,
) -> MurtyReport:
    """max over primes l in [y, y+u] of pi(x, a; l), with y on the GRH schedule.

    ``split_in_F`` optionally filters l (primes splitting completely in F).
    """
    alpha = alpha_value(n, "grh", a == 0)
    y = float(optimal_ell(x, n, alpha))
    u = interval_length(max(y, 2.0), x, epsilon)
    widened = 0
    while True:
        lo, hi = y, y + u
        ells = [int(q) for q in primerange(max(min_ell, math.ceil(lo)), math.floor(hi) + 1) if level % q]
        if split_in_F is not None:
            ells = [q for q in ells if split_in_F(q)]
        if len(ells) >= 2:
            break
        widened += 1
        u *= 2
        if widened > 60:
            raise ValueError("no primes found in any widened interval")
    if widened:
        warnings.warn(f"interval [y, y+u] held fewer than 2 usable primes; widened {widened} times")
    per = {q: pi_x_a_l(records, a, q, x, level).count for q in ells}
    pf = tabulate_pi_f(records, a, [x], n).rows[0].count
    curve = float(BoundProfile(n, "grh", a == 0).curve(x))
    return MurtyReport(x, a, alpha, y, u, (y, y + u), per, pf, curve, widened)


@dataclass
class CurveReport:
    profile: BoundProfile
    x: np.ndarray
    unconditional: np.ndarray
    grh: np.ndarray

    header = ("x", "curve_uncond", "curve_grh")

    def rows(self) -> list[tuple[float, float, float]]:
        return [(float(a), float(b), float(c)) for a, b, c in zip(self.x, self.unconditional, self.grh)]


def bound_curve_report(x_grid, profile: BoundProfile) -> CurveReport:
    """Both theorem curves for ``profile.n`` and ``profile.a_zero`` on the grid."""
    x = np.asarray(list(x_grid), dtype=float)
    if np.any(np.diff(x) <= 0) or np.any(x <= 1):
        raise ValueError("x_grid must be increasing and > 1")
    eps = profile.epsilon if profile.regime == "unconditional" else 0.0
    u = BoundProfile(profile.n, "unconditional", profile.a_zero, epsilon=eps).curve(x)
    g = BoundProfile(profile.n, "grh", profile.a_zero).curve(x)
    return CurveReport(profile, x, u, g)


@dataclass(frozen=True)
class Crossover:
    x: float | None
    second_smaller_beyond: bool


def crossover(p1: BoundProfile, p2: BoundProfile, log_x_range=(1e-6, 700.0), samples: int = 4000) -> Crossover:
    """Largest x where the p2 curve crosses below the p1 curve, scanning log x."""
    if p1.regime != p2.regime:
        raise ValueError("profiles must share a regime")
    ux = np.linspace(*log_x_range, samples)

    def logratio(u):
        x = np.exp(u)
        return np.log(p2.curve(x)) - np.log(p1.curve(x))

    r = logratio(ux)
    beyond = bool(r[-1] < 0)
    sign_changes = np.nonzero(np.diff(np.sign(r)) != 0)[0]
    if not len(sign_changes):
        return Crossover(None, beyond)
    i = sign_changes[-1]
    u = optimize.brentq(logratio, ux[i], ux[i + 1], xtol=1e-14)
    return Crossover(float(math.exp(u)), beyond)


def lt_report(records, a_values: Sequence, x_grid: Sequence[float], ells: Sequence[int], n: int = 1, level: int = 1) -> list[tuple]:
    """Rows of ``REPORT_HEADER``: counts, best split count over ``ells`` and both curves."""
    out = []
    for a in a_values:
        table = tabulate_pi_f(records, a, x_grid, n)
        for row in table.rows:
            best = max((pi_x_a_l(records, a, q, row.x, level).count for q in ells), default=0)
            out.append((row.x, a, row.count, best, row.bound_unconditional, row.bound_grh))
    return out


def curve_records(curve, x: int, a_values: Iterable[int] | None = None) -> list[Rec]:
    """Records for every good p <= x; quartics only where a_p is in ``a_values`` (all if None).

    Traces need only N_1, so restricting the quartics keeps large scans cheap.
    """
    from . import genus2

    wanted = None if a_values is None else set(a_values)
    out = []
    for p, a in genus2.trace_table(curve, int(x)):
        if wanted is None or a in wanted:
            out.append(Rec(p, a, genus2.frobenius_record(curve, p).charpoly))
        else:
            out.append(Rec(p, a))
    return out
