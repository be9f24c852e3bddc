"""Inner twists of eigenvalue systems over small number fields.

An inner twist is a pair (sigma, chi) with sigma(a_p) = chi(p) a_p at every
tabulated prime.  The twists form a group under
``(sigma, chi_sigma) * (tau, chi_tau) = (sigma tau, chi_sigma * sigma(chi_tau))``
whose fixed field is F; the kernels of the characters cut out the abelian
field K.

Field elements are tuples of ``Fraction`` coordinates in the power basis of a
generator theta.  Character values are stored as exponents in Q/Z, i.e.
``chi(r) = exp(2 pi i v)`` with ``v`` a ``Fraction`` in [0, 1).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from itertools import product
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np
import sympy
from sympy import factorint, primitive_root

Elem = tuple[Fraction, ...]


class TwistDegeneracy(ValueError):
    """Two characters twist along the same automorphism (CM/RM-type system)."""


# ---------------------------------------------------------------------------
# number fields


class NumberFieldSpec:
    """Q(theta) with theta a root of a monic irreducible integer polynomial of degree <= 4.

    ``automorphisms`` lists the images sigma(theta) as coordinate vectors;
    the identity is added if missing and always has index 0.
    """

    def __init__(self, defining_poly: Sequence[int], automorphisms: Iterable[Sequence] = ()):
        f = [int(c) for c in defining_poly]
        while f and f[-1] == 0:
            f.pop()
        if len(f) < 2 or f[-1] != 1:
            raise ValueError("defining polynomial must be monic of degree >= 1")
        if len(f) - 1 > 4:
            raise ValueError("degree above 4 is not supported")
        x = sympy.Symbol("x")
        if not sympy.Poly(list(reversed(f)), x).is_irreducible:
            raise ValueError("defining polynomial is reducible over Q")
        self.defining_poly = tuple(f)
        self.degree = len(f) - 1
        ident = self.gen
        imgs = [ident]
        for a in automorphisms:
            e = self.element(a)
            if e != ident:
                imgs.append(e)
        for e in imgs:
            if self.evaluate_poly(self.defining_poly, e) != self.zero:
                raise ValueError(f"{e} is not a root of the defining polynomial")
        if len(set(imgs)) != len(imgs):
            raise ValueError("repeated automorphism")
        self.automorphisms = tuple(imgs)
        for i in range(len(imgs)):
            for j in range(len(imgs)):
                self.compose(i, j)  # raises if not closed

    def __repr__(self):
        return f"NumberFieldSpec({list(self.defining_poly)}, {len(self.automorphisms)} automorphisms)"

    # elements ----------------------------------------------------------------

    def element(self, coords) -> Elem:
        if isinstance(coords, (int, Fraction)):
            coords = [coords]
        c = [Fraction(v) for v in coords]
        if len(c) > self.degree:
            raise ValueError("too many coordinates")
        return tuple(c + [Fraction(0)] * (self.degree - len(c)))

    @property
    def zero(self) -> Elem:
        return self.element(0)

    @property
    def one(self) -> Elem:
        return self.element(1)

    @property
    def gen(self) -> Elem:
        return self.element([0, 1]) if self.degree > 1 else self.element(-self.defining_poly[0])

    def add(self, a: Elem, b: Elem) -> Elem:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Elem, b: Elem) -> Elem:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Elem) -> Elem:
        return tuple(-x for x in a)

    def scale(self, a: Elem, c) -> Elem:
        c = Fraction(c)
        return tuple(x * c for x in a)

    def mul(self, a: Elem, b: Elem) -> Elem:
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        f = self.defining_poly
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                for i in range(d):
                    prod[k - d + i] -= c * f[i]
        return tuple(prod[:d])

    def pow(self, a: Elem, e: int) -> Elem:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out, base = self.one, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, a: Elem) -> Elem:
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        d = self.degree
        cols = [self.mul(a, self.element([0] * i + [1])) for i in range(d)]
        # solve M x = e_0 with M[r][c] = cols[c][r]
        rows = [[cols[c][r] for c in range(d)] + [Fraction(int(r == 0))] for r in range(d)]
        for c in range(d):
            piv = next(r for r in range(c, d) if rows[r][c] != 0)
            rows[c], rows[piv] = rows[piv], rows[c]
            pv = rows[c][c]
            rows[c] = [v / pv for v in rows[c]]
            for r in range(d):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return tuple(rows[r][d] for r in range(d))

    def div(self, a: Elem, b: Elem) -> Elem:
        return self.mul(a, self.inv(b))

    def evaluate_poly(self, coeffs: Sequence, a: Elem) -> Elem:
        out = self.zero
        for c in reversed(coeffs):
            out = self.add(self.mul(out, a), self.element(c))
        return out

    def is_rational(self, a: Elem) -> bool:
        return all(v == 0 for v in a[1:])

    def minpoly(self, a: Elem) -> tuple[Fraction, ...]:
        """Minimal polynomial over Q, monic, constant term first."""
        powers = [self.one]
        while True:
            nxt = self.mul(powers[-1], a)
            M = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in e] for e in powers + [nxt]]).T
            null = M.nullspace()
            if null:
                v = null[0]
                v = v / v[-1]
                return tuple(Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in v)
            powers.append(nxt)

    def degree_of(self, a: Elem) -> int:
        return len(self.minpoly(a)) - 1

    # automorphisms -------------------------------------------------------------

    def apply(self, sigma: int, a: Elem) -> Elem:
        return self.evaluate_poly(a, self.automorphisms[sigma])

    def compose(self, i: int, j: int) -> int:
        """Index of automorphisms[i] o automorphisms[j]."""
        img = self.apply(i, self.automorphisms[j])
        try:
            return self.automorphisms.index(img)
        except ValueError:
            raise ValueError("automorphisms are not closed under composition") from None

    def inverse_automorphism(self, i: int) -> int:
        for j in range(len(self.automorphisms)):
            if self.compose(i, j) == 0:
                return j
        raise ValueError("automorphism without inverse")  # pragma: no cover

    # roots of unity -------------------------------------------------------------

    @cached_property
    def roots_of_unity(self) -> tuple[int, Elem]:
        """(w, zeta) with zeta a generator of the roots of unity of E, of order w.

        A candidate zeta is located numerically by prescribing its image
        under every complex embedding and solving the Vandermonde system;
        rounded coordinates are then verified exactly.
        """
        d = self.degree
        if d > 1:
            emb = np.roots(list(reversed(self.defining_poly)))
            V = np.vander(emb, d, increasing=True)
            cands = sorted((w for w in range(3, 13) if d % int(sympy.totient(w)) == 0), reverse=True)
            for w in cands:
                prim = [k for k in range(1, w) if math.gcd(k, w) == 1]
                for ks in product(prim, repeat=d):
                    c = np.linalg.solve(V, np.exp(2j * np.pi * np.array(ks) / w))
                    if np.max(np.abs(c.imag)) > 1e-6:
                        continue
                    zeta = self.element([Fraction(float(v)).limit_denominator(10**6) for v in c.real])
                    if self.pow(zeta, w) == self.one and all(self.pow(zeta, w // q) != self.one for q in factorint(w)):
                        return w, zeta
        return 2, self.element(-1)

    def root_of_unity(self, v: Fraction) -> Elem:
        """The element exp(2 pi i v) under the fixed identification exp(2 pi i / w) -> zeta."""
        w, zeta = self.roots_of_unity
        k = v * w
        if k.denominator != 1:
            raise ValueError(f"exp(2 pi i {v}) is not in the field")
        return self.pow(zeta, int(k) % w)

    def unity_exponent(self, a: Elem) -> Fraction | None:
        """v with a = exp(2 pi i v), or None if a is not a root of unity."""
        w, zeta = self.roots_of_unity
        z = self.one
        for k in range(w):
            if z == a:
                return Fraction(k, w)
            z = self.mul(z, zeta)
        return None

    def galois_power(self, sigma: int) -> int:
        """s with sigma(zeta) = zeta^s."""
        w, zeta = self.roots_of_unity
        v = self.unity_exponent(self.apply(sigma, zeta))
        return int(v * w)


# ---------------------------------------------------------------------------
# Dirichlet characters


@lru_cache(maxsize=None)
def unit_group(m: int) -> tuple[tuple[int, ...], dict[int, tuple[int, ...]]]:
    """Orders of a cyclic decomposition of (Z/m)^x and the discrete-log vector of each unit."""
    comps = []  # (modulus q^e, generator or list, order)
    for q, e in sorted(factorint(m).items()):
        qe = q**e
        if q == 2:
            if e == 2:
                comps.append((qe, qe - 1, 2))
            elif e >= 3:
                comps.append((qe, qe - 1, 2))
                comps.append((qe, 5, qe // 4))
        else:
            comps.append((qe, primitive_root(qe), qe // q * (q - 1)))
    logs_per = []
    i = 0
    while i < len(comps):
        qe, g, order = comps[i]
        if qe % 8 == 0 and i + 1 < len(comps) and comps[i + 1][0] == qe:
            table = {}
            for s in range(2):
                for k in range(qe // 4):
                    table[pow(-1, s) * pow(5, k, qe) % qe] = (s, k)
            logs_per.append((qe, table, 2))
            i += 2
        else:
            table = {}
            z = 1
            for k in range(order):
                table[z] = (k,)
                z = z * g % qe
            logs_per.append((qe, table, 1))
            i += 1
    orders = tuple(c[2] for c in comps)
    logs = {}
    for r in range(m):
        if math.gcd(r, m) != 1:
            continue
        vec = ()
        for qe, table, _ in logs_per:
            vec += table[r % qe]
        logs[r] = vec
    if m == 1:
        logs = {0: ()}
    return orders, logs


@dataclass(frozen=True)
class DirichletCharacter:
    """Character mod ``modulus`` with chi(r) = exp(2 pi i values[r]) on units."""

    modulus: int
    values: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        m = self.modulus
        if m < 1:
            raise ValueError("modulus must be positive")
        table = {int(r) % m: Fraction(v) % 1 for r, v in dict(self.values).items()}
        units = set(unit_group(m)[1])
        if set(table) != units:
            raise ValueError("character must be given on exactly the units mod m")
        for a in units:
            for b in units:
                if table[a * b % m] != (table[a] + table[b]) % 1:
                    raise ValueError("values are not multiplicative")
        object.__setattr__(self, "values", tuple(sorted(table.items())))

    @classmethod
    def trivial(cls, m: int = 1) -> DirichletCharacter:
        return cls(m, tuple((r, Fraction(0)) for r in unit_group(m)[1]))

    @classmethod
    def from_exponents(cls, m: int, js: Sequence[int]) -> DirichletCharacter:
        orders, logs = unit_group(m)
        vals = tuple((r, sum((Fraction(j * e, o) for j, e, o in zip(js, vec, orders)), Fraction(0)) % 1) for r, vec in logs.items())
        return cls(m, vals)

    @classmethod
    def from_function(cls, m: int, fn: Callable[[int], Fraction]) -> DirichletCharacter:
        return cls(m, tuple((r, Fraction(fn(r))) for r in unit_group(m)[1]))

    @cached_property
    def table(self) -> dict[int, Fraction]:
        return dict(self.values)

    def __call__(self, n: int) -> Fraction | None:
        """Exponent of chi(n), or None when gcd(n, m) > 1 (chi(n) = 0)."""
        return self.table.get(n % self.modulus)

    @property
    def order(self) -> int:
        return reduce(math.lcm, (v.denominator for v in self.table.values()), 1)

    @property
    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.table.values())

    def conductor(self) -> int:
        m = self.modulus
        for d in sorted(sympy.divisors(m)):
            if all(v == 0 for r, v in self.table.items() if r % d == 1 % d):
                return d
        return m  # pragma: no cover

    def is_primitive(self) -> bool:
        return self.conductor() == self.modulus

    def primitive(self) -> DirichletCharacter:
        d = self.conductor()
        if d == self.modulus:
            return self
        vals = {}
        for r, v in self.table.items():
            vals.setdefault(r % d, v)
        return DirichletCharacter(d, tuple(vals.items()))

    def lift(self, m: int) -> DirichletCharacter:
        if m % self.modulus:
            raise ValueError("modulus does not divide m")
        return DirichletCharacter(m, tuple((r, self.table[r % self.modulus]) for r in unit_group(m)[1]))

    def __mul__(self, other: DirichletCharacter) -> DirichletCharacter:
        m = math.lcm(self.modulus, other.modulus)
        a, b = self.lift(m), other.lift(m)
        return DirichletCharacter(m, tuple((r, (a.table[r] + b.table[r]) % 1) for r in a.table)).primitive()

    def power(self, s: int) -> DirichletCharacter:
        return DirichletCharacter(self.modulus, tuple((r, (v * s) % 1) for r, v in self.values)).primitive()

    def inverse(self) -> DirichletCharacter:
        return self.power(-1)

    def kernel(self) -> frozenset[int]:
        return frozenset(r for r, v in self.table.items() if v == 0)

    def in_field(self, E: NumberFieldSpec, n: int) -> Elem:
        """chi(n) as an element of E (zero off the units)."""
        v = self(n)
        return E.zero if v is None else E.root_of_unity(v)


def primitive_characters(m: int, exponent: int | None = None) -> list[DirichletCharacter]:
    """Primitive characters mod m, optionally only those with chi^exponent = 1."""
    orders, _ = unit_group(m)
    ranges = []
    for o in orders:
        step = o // math.gcd(o, exponent) if exponent else 1
        ranges.append(range(0, o, step))
    out = []
    for js in product(*ranges):
        chi = DirichletCharacter.from_exponents(m, js)
        if chi.is_primitive():
            out.append(chi)
    return out


def load_character(path) -> DirichletCharacter:
    """File format: ``m`` on the first line, then ``residue,num,den`` lines."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip() and not ln.startswith("#")]
    m = int(lines[0])
    vals = []
    for ln in lines[1:]:
        r, num, den = (int(t) for t in ln.split(","))
        vals.append((r, Fraction(num, den)))
    return DirichletCharacter(m, tuple(vals))


# ---------------------------------------------------------------------------
# eigenvalue systems and twists


@dataclass
class EigenvalueSystem:
    field: NumberFieldSpec
    table: list[tuple[int, Elem]]
    level: int = 1
    character: DirichletCharacter = field(default_factory=DirichletCharacter.trivial)

    def __post_init__(self):
        self.table = [(int(p), self.field.element(a)) for p, a in self.table]
        ps = [p for p, _ in self.table]
        if ps != sorted(ps) or len(set(ps)) != len(ps):
            raise ValueError("table must be sorted by p with distinct primes")
        if any(math.gcd(p, self.level) != 1 for p in ps):
            raise ValueError("tabulated primes must not divide the level")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.table]

    @classmethod
    def from_csv(cls, path, field: NumberFieldSpec, level: int = 1, character: DirichletCharacter | None = None):
        rows = []
        with open(path, newline="") as fh:
            for row in csv.reader(fh):
                if not row or row[0].strip() in ("p", "") or row[0].startswith("#"):
                    continue
                rows.append((int(row[0]), [Fraction(c.strip()) for c in row[1:]]))
        return cls(field, rows, level, character or DirichletCharacter.trivial())


@dataclass(frozen=True)
class InnerTwist:
    sigma: int
    chi: DirichletCharacter
    field: NumberFieldSpec | None = None

    def __eq__(self, other):
        return isinstance(other, InnerTwist) and (self.sigma, self.chi) == (other.sigma, other.chi)

    def __hash__(self):
        return hash((self.sigma, self.chi))


def twist_relation_failures(system: EigenvalueSystem, sigma: int, chi: DirichletCharacter) -> int:
    """Number of tabulated primes p coprime to m N with sigma(a_p) != chi(p) a_p."""
    E = system.field
    bad = 0
    for p, a in system.table:
        if math.gcd(p, chi.modulus * system.level) != 1:
            continue
        if E.apply(sigma, a) != E.mul(chi.in_field(E, p), a):
            bad += 1
    return bad


def twist_group_law(t1: InnerTwist, t2: InnerTwist) -> InnerTwist:
    """(sigma, chi_sigma) * (tau, chi_tau) = (sigma tau, chi_sigma * sigma(chi_tau))."""
    if t1.field is not None and t2.field is not None and t1.field is not t2.field:
        raise ValueError("twists belong to different systems")
    E = t1.field or t2.field
    if E is None:
        raise ValueError("twists carry no field")
    s = E.galois_power(t1.sigma)
    return InnerTwist(E.compose(t1.sigma, t2.sigma), t1.chi * t2.chi.power(s), E)


def twist_inverse(t: InnerTwist) -> InnerTwist:
    E = t.field
    inv = E.inverse_automorphism(t.sigma)
    # (sigma, chi)^-1 = (sigma^-1, sigma^-1(chi)^-1)
    return InnerTwist(inv, t.chi.power(-E.galois_power(inv)), E)


def identity_twist(E: NumberFieldSpec) -> InnerTwist:
    return InnerTwist(0, DirichletCharacter.trivial(), E)


def _candidates_for(system: EigenvalueSystem, sigma: int) -> dict[int, Fraction]:
    """Exponent of sigma(a_p)/a_p at each p with a_p != 0 (None if not a root of unity)."""
    E = system.field
    out = {}
    for p, a in system.table:
        if a != E.zero:
            out[p] = E.unity_exponent(E.div(E.apply(sigma, a), a))
    return out


def detect_inner_twists(system: EigenvalueSystem, modulus_bound: int = 100, exceptions: int = 0) -> list[InnerTwist]:
    """All (sigma, chi) with chi primitive of modulus <= M satisfying the twist relation.

    ``exceptions`` tolerates that many failing primes per pair; any nonzero
    value is heuristic.
    """
    E = system.field
    need = [int(q) for q in sympy.primerange(2, 100 * modulus_bound + 1) if system.level % q]
    if not set(need) <= set(system.primes):
        raise ValueError(f"table must cover every good prime up to {100 * modulus_bound}")
    w, _ = E.roots_of_unity
    chars = [c for m in range(1, modulus_bound + 1) for c in primitive_characters(m, w)]
    found = []
    for sigma in range(len(E.automorphisms)):
        ratios = _candidates_for(system, sigma)
        hits = []
        for chi in chars:
            bad = 0
            for p, v in ratios.items():
                if math.gcd(p, chi.modulus * system.level) != 1:
                    continue
                if v is None or chi(p) != v:
                    bad += 1
                    if bad > exceptions:
                        break
            if bad <= exceptions:
                hits.append(chi)
        if len(hits) > 1:
            raise TwistDegeneracy(f"system has CM/RM-type degeneracy: {len(hits)} characters for automorphism {sigma}")
        if hits:
            found.append(InnerTwist(sigma, hits[0], E))
    _check_group(found, system)
    return found


def _check_group(twists: list[InnerTwist], system: EigenvalueSystem) -> None:
    E = system.field
    tset = set(twists)
    if twists and identity_twist(E) not in tset:
        raise ArithmeticError("detected twists lack the identity")
    for t in twists:
        if twist_inverse(t) not in tset:
            raise ArithmeticError("detected twists not closed under inversion")
        for u in twists:
            if twist_group_law(t, u) not in tset:
                raise ArithmeticError("detected twists not closed under composition")
        # chi^2 = sigma(eps) / eps
        eps = system.character
        s = E.galois_power(t.sigma)
        lhs = t.chi.power(2)
        rhs = eps.power(s) * eps.inverse()
        if lhs != rhs:
            raise ArithmeticError("twist violates chi^2 = sigma(eps)/eps")


@dataclass(frozen=True)
class FixedField:
    gamma_order: int
    degree: int
    generator: Elem
    minpoly: tuple[Fraction, ...]


def fixed_field_degree(twists: Sequence[InnerTwist], system: EigenvalueSystem | NumberFieldSpec) -> FixedField:
    """|Gamma|, [F:Q] = [E:Q]/|Gamma| and a primitive element of F."""
    E = system.field if isinstance(system, EigenvalueSystem) else system
    sigmas = sorted({t.sigma for t in twists} | {0})
    g = len(sigmas)
    if E.degree % g:
        raise ValueError("|Gamma| does not divide [E:Q]")
    target = E.degree // g

    def average(a):
        tot = E.zero
        for s in sigmas:
            tot = E.add(tot, E.apply(s, a))
        return E.scale(tot, Fraction(1, g))

    trials = [E.pow(E.gen, k) for k in range(1, E.degree + 1)]
    trials += [E.add(E.gen, E.element(c)) for c in range(1, 4)]
    trials += [E.pow(E.add(E.gen, E.element(c)), 2) for c in range(1, 4)]
    for a in trials:
        avg = average(a)
        if avg == E.zero:
            continue
        mp = E.minpoly(avg)
        if len(mp) - 1 == target:
            return FixedField(g, target, avg, mp)
    raise ArithmeticError("no primitive element of F found by averaging")


@dataclass(frozen=True)
class KernelField:
    modulus: int
    subgroup: frozenset[int]

    @property
    def degree(self) -> int:
        return len(unit_group(self.modulus)[1]) // len(self.subgroup)

    def split_test(self, p: int) -> bool:
        return p % self.modulus in self.subgroup


def kernel_field(twists: Sequence[InnerTwist] | Sequence[DirichletCharacter]) -> KernelField:
    chars = [t.chi if isinstance(t, InnerTwist) else t for t in twists]
    m = reduce(math.lcm, (c.modulus for c in chars), 1)
    units = set(unit_group(m)[1])
    S = {r for r in units if all(c(r) == 0 for c in chars)}
    return KernelField(m, frozenset(S))


def check_F_equals_Q_bq(system: EigenvalueSystem, b_table: Sequence[tuple[int, Sequence]], F_degree: int) -> int | None:
    """Least tabulated q with [Q(b_q / eps(q)) : Q] = [F:Q], or None."""
    E = system.field
    eps = system.character
    for q, b in sorted(b_table):
        e = eps.in_field(E, q)
        if e == E.zero:
            continue
        if E.degree_of(E.div(E.element(b), e)) == F_degree:
            return q
    return None


# ---------------------------------------------------------------------------
# synthetic systems


def quadratic_character(q: int) -> DirichletCharacter:
    """Legendre symbol mod an odd prime q."""
    return DirichletCharacter.from_function(q, lambda r: Fraction(0) if pow(r, (q - 1) // 2, q) == 1 else Fraction(1, 2))


def quadratic_field(d: int) -> NumberFieldSpec:
    """Q(sqrt d) with its conjugation."""
    return NumberFieldSpec((-d, 0, 1), [(0, -1)])


def synthetic_quadratic_system(d: int = 2, q: int = 5, p_max: int = 10**4, seed: int = 0) -> EigenvalueSystem:
    """a_p = u_p when chi_q(p) = 1 and v_p sqrt(d) when chi_q(p) = -1, with u_p, v_p nonzero."""
    rng = np.random.default_rng(seed)
    E = quadratic_field(d)
    chi = quadratic_character(q)
    table = []
    for p in sympy.primerange(2, p_max + 1):
        p = int(p)
        if p == q:
            continue
        mag = int(rng.integers(1, max(2, int(4 * math.sqrt(p)))))
        sign = 1 if rng.integers(0, 2) else -1
        if chi(p) == 0:
            table.append((p, E.element(sign * mag)))
        else:
            table.append((p, E.element([0, sign * mag])))
    return EigenvalueSystem(E, table, level=q)


def biquadratic_field() -> NumberFieldSpec:
    """Q(sqrt 2, sqrt 3) = Q(theta), theta = sqrt 2 + sqrt 3, with its Klein four-group."""
    # sqrt2 = (theta^3 - 9 theta)/2, sqrt3 = (11 theta - theta^3)/2
    h = Fraction(1, 2)
    s2 = (0, -9 * h, 0, h)
    s3 = (0, 11 * h, 0, -h)
    # sigma images of theta: -sqrt2 + sqrt3, sqrt2 - sqrt3, -sqrt2 - sqrt3
    neg2 = tuple(-a + b for a, b in zip(s2, s3))
    neg3 = tuple(a - b for a, b in zip(s2, s3))
    both = (0, -1, 0, 0)
    return NumberFieldSpec((1, 0, -10, 0, 1), [neg2, neg3, both])
