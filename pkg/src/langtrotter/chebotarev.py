"""Effective Chebotarev bounds as calculators, plus a Frobenius-class simulator.

Every implied constant defaults to 1 and can be overridden; nothing here is
calibrated, so only ratios and slopes of these quantities are meaningful.
Exponents are exact ``Fraction`` values.

The simulator draws Frobenius labels independently with probability
|class|/|G|.  That is a model of equidistribution and nothing more.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np
from scipy import integrate, optimize, special, stats

from . import gsp4

REGIMES = ("unconditional", "grh")


# ---------------------------------------------------------------------------
# logarithmic integral


def li(x: float) -> float:
    """Li(x) = integral from 2 to x of dt / log t."""
    if x < 2:
        raise ValueError("li needs x >= 2")
    if x == 2:
        return 0.0
    # substitute t = e^u: integrand e^u / u on [log 2, log x]
    a, b = math.log(2.0), math.log(x)
    val, err = integrate.quad(lambda u: math.exp(u - b) / u, a, b, epsabs=0.0, epsrel=1e-12, limit=200)
    return val * math.exp(b)


def li_closed_form(x: float) -> float:
    """Ei(log x) - Ei(log 2), used as a cross-check."""
    return float(special.expi(math.log(x)) - special.expi(math.log(2.0)))


# ---------------------------------------------------------------------------
# exponents


def _regime(regime: str) -> str:
    r = regime.lower()
    if r not in REGIMES:
        raise ValueError(f"regime must be one of {REGIMES}")
    return r


def alpha_value(n: int, regime: str, a_zero: bool) -> Fraction:
    if n < 1:
        raise ValueError("n must be >= 1")
    denom = {("unconditional", False): 10, ("unconditional", True): 7, ("grh", False): 11, ("grh", True): 10}
    return Fraction(n, denom[_regime(regime), bool(a_zero)] * n + 1)


def serre_exponent(D, d, r) -> Fraction:
    """(D - d) / (D - r/2)."""
    D, d, r = Fraction(D), Fraction(d), Fraction(r)
    if not (D > d >= 0) or not (0 <= r <= 2 * D):
        raise ValueError("need D > d >= 0 and 0 <= r <= 2D")
    den = D - r / 2
    if den <= 0:
        raise ValueError("nonpositive denominator")
    return (D - d) / den


def serre_dimensions(n: int, a_zero: bool, strengthened: bool = False) -> tuple[int, int, int]:
    """(D, d, r) for the dimension count of G and the trace condition.

    a != 0: D = 10n+1, d = 9n+1, r = 0.  a = 0: D = 9n+1, d = 8n+1, r = 4n.
    ``strengthened`` keeps D = 10n+1 with the r = 4n centralizer floor.
    """
    if not a_zero:
        return 10 * n + 1, 9 * n + 1, 0
    if strengthened:
        return 10 * n + 1, 9 * n + 1, 4 * n
    return 9 * n + 1, 8 * n + 1, 4 * n


def balance_exponent(s, e) -> Fraction:
    """alpha with y = x^(alpha/s) balancing y^-s x against y^e x^(1/2): s / (2s + 2e)."""
    s, e = Fraction(s), Fraction(e)
    return s / (2 * s + 2 * e)


def grh_second_term_exponent(n: int, a_zero: bool) -> Fraction:
    """Exponent of l in |C|^(1/2) [L^B:Q]: (9n+1)/2 for a != 0, (8n+1)/2 for a = 0."""
    return Fraction(8 * n + 1 if a_zero else 9 * n + 1, 2)


@dataclass(frozen=True)
class BoundProfile:
    n: int
    regime: str
    a_zero: bool
    alpha: Fraction | None = None
    epsilon: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "regime", _regime(self.regime))
        exact = alpha_value(self.n, self.regime, self.a_zero)
        if self.alpha is None:
            object.__setattr__(self, "alpha", exact)
        elif Fraction(self.alpha) != exact:
            raise ValueError(f"alpha {self.alpha} differs from {exact}")
        if self.epsilon < 0 or (self.regime == "grh" and self.epsilon):
            raise ValueError("epsilon must be >= 0 and only applies to the unconditional regime")
        if self.regime == "unconditional" and self.epsilon >= 1 + float(self.alpha):
            raise ValueError("epsilon too large")

    def csv_row(self) -> tuple:
        return (self.n, self.regime, int(self.a_zero), self.alpha.numerator, self.alpha.denominator)

    def curve(self, x):
        """x/(log x)^(1+alpha-eps) or x^(1-alpha)/(log x)^(1-2 alpha)."""
        x = np.asarray(x, dtype=float)
        a = float(self.alpha)
        lx = np.log(x)
        if self.regime == "unconditional":
            return x / lx ** (1 + a - self.epsilon)
        return x ** (1 - a) / lx ** (1 - 2 * a)


PROFILE_HEADER = ("n", "regime", "a_zero", "alpha_num", "alpha_den")


# ---------------------------------------------------------------------------
# extension data and bound evaluators


@dataclass(frozen=True)
class ExtensionData:
    degree_L: int
    degree_K: int
    rel_degree: int
    disc_K: int
    ramified_primes: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "ramified_primes", frozenset(int(p) for p in self.ramified_primes))
        if min(self.degree_L, self.degree_K, self.rel_degree) < 1:
            raise ValueError("degrees must be positive")
        if self.degree_L != self.degree_K * self.rel_degree:
            raise ValueError("[L:Q] must equal [K:Q][L:K]")
        if self.disc_K == 0:
            raise ValueError("disc(K) must be nonzero")


def m_constant(ext: ExtensionData) -> float:
    """2 [L:K] |disc K|^(1/[K:Q]) prod_{p ramified} p."""
    return 2.0 * ext.rel_degree * abs(ext.disc_K) ** (1.0 / ext.degree_K) * math.prod(ext.ramified_primes)


def hensel_bound(ext: ExtensionData) -> float:
    """([L:Q] - [K:Q]) sum log p + [L:Q] log [L:K]."""
    s = sum(math.log(p) for p in ext.ramified_primes)
    return (ext.degree_L - ext.degree_K) * s + ext.degree_L * math.log(ext.rel_degree)


def lmo_threshold(log_disc: float, c1: float = 1.0) -> float:
    """c1 L log L log log(log 6 + L), L = log|disc|; the log x beyond which the bound is valid."""
    L = float(log_disc)
    if L <= 1.0:
        return 0.0
    lll = math.log(math.log(math.log(6.0) + L))
    return max(0.0, c1 * L * math.log(L) * lll)


def lmo_bound(x: float, ratio: float, log_disc: float, c1: float = 1.0, c2: float = 1.0) -> tuple[bool, float]:
    """(log x > threshold, c2 * ratio * Li(x))."""
    return math.log(x) > lmo_threshold(log_disc, c1), c2 * ratio * li(x)


def lmo_boundary(log_disc: float, c1: float = 1.0) -> float:
    """Smallest x for which the threshold holds, located by bisection on log x."""
    T = lmo_threshold(log_disc, c1)
    if T <= math.log(2.0):
        return 2.0
    lo, hi = math.log(2.0), 2 * T + 1
    g = lambda u: u - T  # noqa: E731
    u = optimize.bisect(g, lo, hi, xtol=1e-14, rtol=1e-15, maxiter=400)
    return math.exp(u)


@dataclass(frozen=True)
class GRHBound:
    main: float
    error_disc: float
    error_degree: float

    @property
    def error(self) -> float:
        return self.error_disc + self.error_degree

    @property
    def total(self) -> float:
        return self.main + self.error


def grh_bound(x: float, C: float, G: float, log_disc: float, degree_L: int, error_constant: float = 1.0) -> GRHBound:
    """(|C|/|G|) Li(x) + k (|C|/|G|) x^(1/2) (log|disc L| + [L:Q] log x)."""
    r = C / G
    sx = math.sqrt(x)
    return GRHBound(r * li(x), error_constant * r * sx * log_disc, error_constant * r * sx * degree_L * math.log(x))


def zywina_bound(x, C: float, G: float, degree_K: float, M: float, constant: float = 1.0):
    """(|C|/|G|) x/log x + k |C|^(1/2) [K:Q] x^(1/2)/log x log M."""
    if M <= 1:
        raise ValueError("M(L/K) must exceed 1")
    x = np.asarray(x, dtype=float)
    lx = np.log(x)
    out = (C / G) * x / lx + constant * math.sqrt(C) * degree_K * np.sqrt(x) / lx * math.log(M)
    return float(out) if out.ndim == 0 else out


def optimal_ell(x, n: int, alpha: Fraction):
    """y = x^(alpha/n) / (log x)^(2 alpha/n)."""
    x = np.asarray(x, dtype=float)
    e = float(alpha) / n
    return x**e / np.log(x) ** (2 * e)


def assembled_bound(x, n: int, a_zero: bool = False, ell=None):
    """(1/l^n) x/log x + l^e log l x^(1/2)/log x at l = y(x) unless given."""
    x = np.asarray(x, dtype=float)
    alpha = alpha_value(n, "grh", a_zero)
    y = optimal_ell(x, n, alpha) if ell is None else np.asarray(ell, dtype=float)
    e = float(grh_second_term_exponent(n, a_zero))
    lx = np.log(x)
    return y ** (-n) * x / lx + y**e * np.log(y) * np.sqrt(x) / lx


def loglog_fit(x, values) -> float:
    """Least-squares slope of log(values) against log(x)."""
    lx = np.log(np.asarray(x, dtype=float))
    return float(np.polyfit(lx, np.log(np.asarray(values, dtype=float)), 1)[0])


def power_exponent_fit(x, values) -> float:
    """Coefficient of log x when regressing log(values) on (log x, log log x, 1)."""
    lx = np.log(np.asarray(x, dtype=float))
    A = np.column_stack([lx, np.log(lx), np.ones_like(lx)])
    coef, *_ = np.linalg.lstsq(A, np.log(np.asarray(values, dtype=float)), rcond=None)
    return float(coef[0])


# ---------------------------------------------------------------------------
# simulator


def prime_sieve(x: int) -> np.ndarray:
    x = int(x)
    if x < 2:
        return np.zeros(0, dtype=np.int64)
    s = np.ones(x + 1, dtype=bool)
    s[:2] = False
    for p in range(2, math.isqrt(x) + 1):
        if s[p]:
            s[p * p :: p] = False
    return np.nonzero(s)[0].astype(np.int64)


@dataclass
class GroupModel:
    """Class labels, their sizes, and optionally the power map label -> label^m."""

    class_sizes: dict[Hashable, int]
    power_map: Callable[[Hashable, int], Hashable] | None = None

    @property
    def order(self) -> int:
        return sum(self.class_sizes.values())


@dataclass
class FrobeniusStream:
    group_order: int
    class_sizes: dict[Hashable, int]
    draws: list[tuple[int, Hashable]]
    power_map: Callable[[Hashable, int], Hashable] | None = None

    def __post_init__(self):
        if sum(self.class_sizes.values()) != self.group_order:
            raise ValueError("class sizes do not sum to |G|")
        ps = [p for p, _ in self.draws]
        if any(b <= a for a, b in zip(ps, ps[1:])):
            raise ValueError("draws must be sorted by prime")

    @property
    def primes(self) -> np.ndarray:
        return np.array([p for p, _ in self.draws], dtype=np.int64)

    @property
    def labels(self) -> list:
        return [c for _, c in self.draws]

    def pi_C(self, C, x: float) -> int:
        C = set(C)
        return sum(1 for p, c in self.draws if p <= x and c in C)

    def frequencies(self) -> dict:
        out = dict.fromkeys(self.class_sizes, 0)
        for _, c in self.draws:
            out[c] += 1
        return out

    def dump_rows(self) -> list[tuple[int, str]]:
        return [(p, str(c)) for p, c in self.draws]


STREAM_HEADER = ("p", "class_label")


def simulate_frobenius(group: GroupModel | Mapping[Hashable, int], x: int, seed: int = 0, block: int = 1 << 14) -> FrobeniusStream:
    """Independent labels for every prime p <= x, deterministic per seed.

    Primes are split into fixed blocks, each with its own child seed, so the
    stream does not depend on how blocks are scheduled.
    """
    if not isinstance(group, GroupModel):
        group = GroupModel(dict(group))
    labels = list(group.class_sizes)
    sizes = np.array([group.class_sizes[c] for c in labels], dtype=float)
    if np.any(sizes < 0) or sizes.sum() <= 0:
        raise ValueError("class sizes must be nonnegative with positive total")
    probs = sizes / sizes.sum()
    primes = prime_sieve(x)
    nblocks = max(1, -(-len(primes) // block))
    children = np.random.SeedSequence(seed).spawn(nblocks)
    idx = np.empty(len(primes), dtype=np.int64)
    for b, ss in enumerate(children):
        sl = slice(b * block, min(len(primes), (b + 1) * block))
        idx[sl] = np.random.default_rng(ss).choice(len(labels), size=sl.stop - sl.start, p=probs)
    draws = [(int(p), labels[i]) for p, i in zip(primes, idx)]
    return FrobeniusStream(group.order, dict(group.class_sizes), draws, group.power_map)


@dataclass(frozen=True)
class WeightedCount:
    weighted: float
    plain: int
    powers_used: bool

    @property
    def difference(self) -> float:
        return self.weighted - self.plain


def weighted_pi(stream: FrobeniusStream, C, x: float) -> WeightedCount:
    """Sum over p^m <= x of (1/m) [Frob_p^m in C], together with plain pi_C(x)."""
    C = set(C)
    plain = 0
    total = 0.0
    has_pm = stream.power_map is not None
    for p, c in stream.draws:
        if p > x:
            break
        if c in C:
            plain += 1
            total += 1.0
        if has_pm:
            m, pm = 2, p * p
            while pm <= x:
                if stream.power_map(c, m) in C:
                    total += 1.0 / m
                m += 1
                pm *= p
    return WeightedCount(total, plain, has_pm)


def chi_square_pvalue(stream: FrobeniusStream) -> float:
    freq = stream.frequencies()
    labels = list(stream.class_sizes)
    obs = np.array([freq[c] for c in labels], dtype=float)
    exp = np.array([stream.class_sizes[c] for c in labels], dtype=float)
    keep = exp > 0
    exp = exp[keep] / exp[keep].sum() * obs.sum()
    return float(stats.chisquare(obs[keep], exp).pvalue)


# ---------------------------------------------------------------------------
# group models


@dataclass
class AbelianGroup:
    """Product of cyclic groups Z/n_i; labels are tuples of exponents."""

    orders: tuple[int, ...]

    def elements(self) -> list[tuple[int, ...]]:
        grids = np.indices(self.orders).reshape(len(self.orders), -1).T
        return [tuple(int(v) for v in row) for row in grids]

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    def power(self, g, m: int):
        return tuple((v * m) % n for v, n in zip(g, self.orders))

    def model(self) -> GroupModel:
        return GroupModel({g: 1 for g in self.elements()}, self.power)


def torus_model(ell: int) -> AbelianGroup:
    """Diagonal torus diag(a, b, nu/b, nu/a) of GSp4(F_l), as (F_l^x)^3 in discrete-log coordinates."""
    return AbelianGroup((ell - 1,) * 3)


@dataclass(frozen=True)
class SubgroupModel:
    """H = {g : g_0 = 0 mod d} inside an abelian group with first factor Z/n_0, index d."""

    group: AbelianGroup
    d: int

    def __post_init__(self):
        if self.group.orders[0] % self.d:
            raise ValueError("d must divide the first cyclic order")

    def contains(self, g) -> bool:
        return g[0] % self.d == 0

    def residue_degree(self, g) -> int:
        """Order of gH in G/H = Z/d."""
        return self.d // math.gcd(g[0], self.d)


def restricted_weighted_pi(stream: FrobeniusStream, sub: SubgroupModel, C, x: float) -> float:
    """Weighted count of C cap H for L / L^H, from the stream over Q.

    A prime p with Frobenius g has h/f primes above it in L^H, each of norm
    p^f and Frobenius g^f, with f the order of gH.
    """
    C = {c for c in C if sub.contains(c)}
    h = sub.d
    total = 0.0
    for p, g in stream.draws:
        if p > x:
            break
        f = sub.residue_degree(g)
        gf = sub.group.power(g, f)
        k, norm = 1, p**f
        while norm <= x:
            if sub.group.power(gf, k) in C:
                total += (h / f) / k
            k += 1
            norm *= p**f
    return total


def gsp4_trace_classes(q: int = 3) -> GroupModel:
    """GSp4(F_q) partitioned by trace (unions of conjugacy classes), by exhaustive enumeration."""
    F = gsp4.field_for_q(q)
    counts: dict[int, int] = {}
    for mats, _ in gsp4.enumerate_arrays("gsp4", q):
        tr, n = np.unique(gsp4.traces(F, mats), return_counts=True)
        for t, c in zip(tr.tolist(), n.tolist()):
            counts[t] = counts.get(t, 0) + c
    return GroupModel(dict(sorted(counts.items())))


def binomial_sigma(n: int, prob: float) -> float:
    return math.sqrt(n * prob * (1 - prob))


def difference_envelope(x: Iterable[float]) -> np.ndarray:
    x = np.asarray(list(x), dtype=float)
    return np.sqrt(x) / np.log(x)
