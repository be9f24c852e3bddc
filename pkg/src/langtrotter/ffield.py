"""Exact arithmetic in F_l, F_{l^k} (k <= 4) and univariate polynomials.

Field elements are encoded as integers in ``[0, q)``: an element of F_{l^k}
with coordinates ``(c_0, ..., c_{k-1})`` in the power basis of the defining
polynomial is stored as ``sum c_i * l**i``.  The :class:`GF` object carries
the arithmetic for encoded values, both for Python ints and for numpy arrays
(the latter is what the group-enumeration code uses).  The element classes
:class:`PrimeFieldElement` and :class:`ExtFieldElement` are thin immutable
wrappers for user-facing code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint, isprime

MAX_EXT_DEGREE = 4
TABLE_LIMIT = 1 << 20


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p on coefficient lists (lowest first)


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % p for v in out])


def _prem(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over F_p."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim([v % p for v in a[:dm]])


def _ppowmod(base: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    b = _prem(base, m, p)
    while e:
        if e & 1:
            result = _prem(_pmul_mod(result, b, p), m, p)
        e >>= 1
        if e:
            b = _prem(_pmul_mod(b, b, p), m, p)
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim([v % p for v in a]), _trim([v % p for v in b])
    while b:
        inv = pow(b[-1], -1, p)
        mb = [v * inv % p for v in b]
        a, b = b, _prem(a, mb, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [v * inv % p for v in a]
    return a


def is_irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over F_p."""
    m = [c % p for c in coeffs]
    k = len(m) - 1
    if k < 1 or m[-1] != 1:
        raise ValueError("expected a monic polynomial of positive degree")
    if k == 1:
        return True
    x = [0, 1]
    for r in factorint(k):
        h = _ppowmod(x, p ** (k // r), m, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(m, _trim(diff), p)) != 1:
            return False
    h = _ppowmod(x, p**k, m, p)
    return _trim([(a - b) % p for a, b in itertools.zip_longest(h, x, fillvalue=0)]) == []


def _x_is_primitive(m: Sequence[int], p: int) -> bool:
    order = p ** (len(m) - 1) - 1
    for r in factorint(order):
        if _ppowmod([0, 1], order // r, m, p) == [1]:
            return False
    return True


@lru_cache(maxsize=None)
def conway_polynomial(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least primitive monic polynomial of degree ``k``.

    Candidates are ordered by ``(c_{k-1}, ..., c_0)``; the first one that is
    irreducible with ``x`` of full multiplicative order wins.  Deterministic,
    so it serves as the fixed defining-polynomial table for ``p <= 100``.
    """
    if not isprime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    if not 1 <= k <= MAX_EXT_DEGREE:
        raise ValueError(f"extension degree {k} unsupported (k <= {MAX_EXT_DEGREE})")
    if k == 1:
        from sympy import primitive_root

        return ((-primitive_root(p)) % p, 1)
    for high in itertools.product(range(p), repeat=k):
        coeffs = tuple(reversed(high)) + (1,)
        if coeffs[0] == 0:
            continue
        if is_irreducible_mod_p(coeffs, p) and _x_is_primitive(coeffs, p):
            return coeffs
    raise RuntimeError("no primitive polynomial found")  # pragma: no cover


@lru_cache(maxsize=None)
def _check_prime(p: int) -> None:
    if p == 2 or not isprime(p):
        raise ValueError(f"modulus {p} is not an odd prime")


# ---------------------------------------------------------------------------
# the field object


class GF:
    """The finite field F_q with q = p**k, acting on integer-encoded elements."""

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        _check_prime(p)
        if not 1 <= k <= MAX_EXT_DEGREE:
            raise ValueError(f"extension degree {k} unsupported")
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            self.modulus: tuple[int, ...] = (0, 1)
        else:
            if modulus is None:
                modulus = conway_polynomial(p, k)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("defining polynomial must be monic of degree k")
            if not is_irreducible_mod_p(modulus, p):
                raise ValueError("defining polynomial is reducible")
            self.modulus = modulus
        self._pows = np.array([p**i for i in range(k)], dtype=np.int64)
        self._exp = self._log = None
        self._inv_table = None
        if k > 1 and self.q <= TABLE_LIMIT:
            self._build_tables()

    # identity -----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k, self.modulus) == (
            other.p,
            other.k,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={self.modulus})"

    zero = 0
    one = 1

    # encoding -------------------------------------------------------------
    def coords(self, a: int) -> tuple[int, ...]:
        a = int(a)
        return tuple((a // self.p**i) % self.p for i in range(self.k))

    def encode(self, coords: Sequence[int]) -> int:
        coords = list(coords) + [0] * (self.k - len(coords))
        if len(coords) > self.k:
            raise ValueError("too many coordinates")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coords))

    def from_int(self, n: int) -> int:
        """Image of the rational integer ``n``."""
        return int(n) % self.p

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def units(self) -> np.ndarray:
        return np.arange(1, self.q, dtype=np.int64)

    def __call__(self, value):
        if self.k == 1:
            return PrimeFieldElement(int(value) % self.p, self.p)
        if isinstance(value, (int, np.integer)):
            return ExtFieldElement.from_int(int(value), self)
        return ExtFieldElement(tuple(int(c) % self.p for c in value), self)

    # scalar polynomial-basis multiplication (no tables) ----------------------
    def _mul_coords(self, a: int, b: int) -> int:
        prod = _pmul_mod(self.coords(a), self.coords(b), self.p)
        return self.encode(_prem(prod, self.modulus, self.p))

    def _build_tables(self):
        q = self.q
        gen = None
        for g in range(self.p, q):
            if self._order_is_full(g):
                gen = g
                break
        exp = np.empty(q - 1, dtype=np.int64)
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            cur = self._mul_coords(cur, gen)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self._exp, self._log, self.generator = exp, log, gen

    def _order_is_full(self, g: int) -> bool:
        order = self.q - 1
        for r in factorint(order):
            if self._pow_coords(g, order // r) == 1:
                return False
        return True

    def _pow_coords(self, a: int, e: int) -> int:
        result, b = 1, a
        while e:
            if e & 1:
                result = self._mul_coords(result, b)
            e >>= 1
            if e:
                b = self._mul_coords(b, b)
        return result

    # arithmetic on encoded values (ints or arrays) -----------------------------
    @staticmethod
    def _out(x, scalar):
        return int(x) if scalar else x

    def _digits(self, a):
        a = np.asarray(a, dtype=np.int64)
        return [(a // int(self._pows[i])) % self.p for i in range(self.k)]

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        scalar = np.isscalar(a) and np.isscalar(b)
        da, db = self._digits(a), self._digits(b)
        out = sum(((x + y) % self.p) * int(w) for x, y, w in zip(da, db, self._pows))
        return self._out(out, scalar)

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        scalar = np.isscalar(a)
        out = sum(((-x) % self.p) * int(w) for x, w in zip(self._digits(a), self._pows))
        return self._out(out, scalar)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        scalar = np.isscalar(a) and np.isscalar(b)
        if self._log is None:
            if not scalar:
                raise ValueError("vectorized arithmetic needs log tables (q too large)")
            return self._mul_coords(a, b)
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        idx = (self._log[a] + self._log[b]) % (self.q - 1)
        out = np.where((a == 0) | (b == 0), 0, self._exp[idx])
        return self._out(out, scalar)

    def inv(self, a):
        if np.isscalar(a):
            if int(a) == 0:
                raise ZeroDivisionError("inverse of zero")
            if self.k == 1:
                return pow(int(a), -1, self.p)
            if self._log is None:
                return self._pow_coords(int(a), self.q - 2)
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            out = self.inverse_table()[a]
        else:
            out = self._exp[(-self._log[a]) % (self.q - 1)]
        return int(out) if out.ndim == 0 else out

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        e = int(e)
        if np.isscalar(a):
            a = int(a)
            if e < 0:
                a, e = self.inv(a), -e
            if self.k == 1:
                return pow(a, e, self.p)
            if self._log is None:
                return self._pow_coords(a, e)
            if a == 0:
                return 0 if e else 1
            return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            a, e = self.inv(a), -e
        result = np.ones_like(a)
        base = a.copy()
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def is_square(self, a) -> bool:
        if int(a) == 0:
            return True
        return self.pow(int(a), (self.q - 1) // 2) == 1

    def inverse_table(self) -> np.ndarray:
        """Array ``t`` with ``t[a] = a^{-1}`` for units (``t[0] = 0``)."""
        if getattr(self, "_inv_table", None) is None:
            t = np.zeros(self.q, dtype=np.int64)
            if self.k == 1:
                t[1:] = [pow(v, -1, self.p) for v in range(1, self.p)]
            else:
                u = self.units()
                t[u] = self._exp[(-self._log[u]) % (self.q - 1)]
            self._inv_table = t
        return self._inv_table


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> GF:
    """Cached field with the table defining polynomial."""
    return GF(p, k)


# ---------------------------------------------------------------------------
# element wrappers


@dataclass(frozen=True)
class PrimeFieldElement:
    value: int
    modulus: int

    def __post_init__(self):
        _check_prime(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise ValueError("value out of range")

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.modulus
        return NotImplemented

    def _new(self, v: int) -> PrimeFieldElement:
        return PrimeFieldElement(v % self.modulus, self.modulus)

    def __add__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._new(self.value + v)

    __radd__ = __add__

    def __sub__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._new(self.value - v)

    def __rsub__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._new(v - self.value)

    def __mul__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._new(self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def inverse(self) -> PrimeFieldElement:
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._new(pow(self.value, -1, self.modulus))

    def __truediv__(self, o):
        v = self._coerce(o)
        if v is NotImplemented:
            return NotImplemented
        return self * self._new(v).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._new(pow(self.value, e, self.modulus))

    def __eq__(self, o):
        if isinstance(o, PrimeFieldElement):
            return (self.value, self.modulus) == (o.value, o.modulus)
        if isinstance(o, (int, np.integer)):
            return self.value == int(o) % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.modulus}"

    @property
    def field(self) -> GF:
        return field(self.modulus)


@dataclass(frozen=True, eq=False)
class ExtFieldElement:
    coords: tuple[int, ...]
    gf: GF

    @classmethod
    def from_int(cls, n: int, gf: GF) -> ExtFieldElement:
        return cls(gf.coords(n), gf)

    def __post_init__(self):
        if len(self.coords) != self.gf.k:
            raise ValueError("wrong number of coordinates")

    @property
    def defining_poly(self) -> tuple[int, ...]:
        return self.gf.modulus

    @property
    def value(self) -> int:
        return self.gf.encode(self.coords)

    def _coerce(self, o) -> int:
        if isinstance(o, ExtFieldElement):
            if o.gf != self.gf:
                raise ValueError("mixed fields")
            return o.value
        if isinstance(o, PrimeFieldElement) and o.modulus == self.gf.p:
            return o.value
        if isinstance(o, (int, np.integer)):
            return self.gf.from_int(int(o))
        return NotImplemented

    def _new(self, v: int) -> ExtFieldElement:
        return ExtFieldElement.from_int(v, self.gf)

    def __add__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._new(self.gf.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._new(self.gf.sub(self.value, v))

    def __rsub__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self._new(self.gf.sub(v, self.value))

    def __mul__(self, o):
        v = self._coerce(o)
        if v is NotImplemented:
            return NotImplemented
        return self._new(self.gf._mul_coords(self.value, v))

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(self.gf.neg(self.value))

    def inverse(self) -> ExtFieldElement:
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._new(self.gf._pow_coords(self.value, self.gf.q - 2))

    def __truediv__(self, o):
        v = self._coerce(o)
        if v is NotImplemented:
            return NotImplemented
        return self * self._new(v).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._new(self.gf._pow_coords(self.value, e))

    def __eq__(self, o):
        v = self._coerce(o)
        return NotImplemented if v is NotImplemented else self.value == v

    def __hash__(self):
        return hash((self.value, self.gf))

    def __repr__(self):
        return f"{list(self.coords)} in {self.gf!r}"


# ---------------------------------------------------------------------------
# coefficient rings for Poly


class _Rationals:
    """Q with Fraction arithmetic; integer-valued results collapse to int."""

    zero = 0
    one = 1

    @staticmethod
    def _norm(x):
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x.numerator)
        return x

    def add(self, a, b):
        return self._norm(a + b)

    def sub(self, a, b):
        return self._norm(a - b)

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return self._norm(a * b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._norm(Fraction(1) / Fraction(a))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return n

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, _Rationals)

    def __hash__(self):
        return hash("QQ")


QQ = _Rationals()


def _to_ring_value(c, ring):
    if isinstance(c, PrimeFieldElement):
        if not isinstance(ring, GF) or ring.p != c.modulus:
            raise ValueError("coefficient not in the polynomial's field")
        return c.value
    if isinstance(c, ExtFieldElement):
        if ring != c.gf:
            raise ValueError("coefficient not in the polynomial's field")
        return c.value
    if isinstance(ring, GF):
        return int(c) % ring.p
    if isinstance(c, (int, np.integer)):
        return int(c)
    return QQ._norm(Fraction(c))


class Poly:
    """Univariate polynomial, coefficients lowest degree first.

    ``ring`` is either a :class:`GF` (coefficients stored encoded) or ``QQ``.
    """

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable, ring=QQ):
        self.ring = ring
        vals = [_to_ring_value(c, ring) for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        self.coeffs = tuple(vals)

    @classmethod
    def _raw(cls, vals, ring) -> Poly:
        obj = cls.__new__(cls)
        vals = list(vals)
        while vals and vals[-1] == 0:
            vals.pop()
        obj.coeffs = tuple(vals)
        obj.ring = ring
        return obj

    @classmethod
    def x(cls, ring=QQ) -> Poly:
        return cls._raw([0, 1], ring)

    @classmethod
    def from_roots(cls, roots, ring) -> Poly:
        out = cls._raw([1], ring)
        for r in roots:
            out = out * cls._raw([ring.neg(_to_ring_value(r, ring)), 1], ring)
        return out

    # basic properties
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.ring))

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, {self.ring!r})"

    def elements(self) -> list:
        """Coefficients as field elements (GF) or numbers (QQ)."""
        if isinstance(self.ring, GF):
            return [self.ring(c) for c in self.coeffs]
        return list(self.coeffs)

    # arithmetic
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials over different rings")
            return other
        return Poly([other], self.ring)

    def __add__(self, other):
        o = self._coerce(other)
        R = self.ring
        out = [
            R.add(a, b)
            for a, b in itertools.zip_longest(self.coeffs, o.coeffs, fillvalue=0)
        ]
        return Poly._raw(out, R)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([self.ring.neg(a) for a in self.coeffs], self.ring)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        R = self.ring
        if self.is_zero() or o.is_zero():
            return Poly._raw([], R)
        if isinstance(R, GF) and R.k == 1:
            return Poly._raw(_pmul_mod(self.coeffs, o.coeffs, R.p), R)
        out = [R.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = R.add(out[i + j], R.mul(a, b))
        return Poly._raw(out, R)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        c = _to_ring_value(c, self.ring)
        return Poly._raw([self.ring.mul(c, a) for a in self.coeffs], self.ring)

    def monic(self) -> Poly:
        if self.is_zero():
            raise ValueError("zero polynomial has no monic associate")
        return self.scale(self.ring.inv(self.lc))

    def divmod(self, other) -> tuple[Poly, Poly]:
        d = self._coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        R = self.ring
        rem = list(self.coeffs)
        dd = d.degree
        inv_lc = R.inv(d.lc)
        quot = [R.zero] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = R.mul(c, inv_lc)
            quot[i - dd] = f
            for j in range(dd + 1):
                rem[i - dd + j] = R.sub(rem[i - dd + j], R.mul(f, d.coeffs[j]))
        return Poly._raw(quot, R), Poly._raw(rem[:dd], R)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __pow__(self, e: int):
        out = Poly._raw([1], self.ring)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def powmod(self, e: int, m: Poly) -> Poly:
        out = Poly._raw([1], self.ring) % m
        base = self % m
        while e:
            if e & 1:
                out = (out * base) % m
            e >>= 1
            if e:
                base = (base * base) % m
        return out

    def derivative(self) -> Poly:
        R = self.ring
        return Poly._raw(
            [R.mul(R.from_int(i), c) for i, c in enumerate(self.coeffs)][1:], R
        )

    def __call__(self, x):
        R = self.ring
        xv = _to_ring_value(x, R)
        acc = R.zero
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, xv), c)
        if isinstance(R, GF):
            return R(acc)
        return acc

    def eval_encoded(self, x):
        """Evaluate at encoded value(s); vectorized over numpy arrays."""
        R = self.ring
        acc = np.zeros_like(np.asarray(x, dtype=np.int64)) if not np.isscalar(x) else 0
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, x), c)
        return acc

    def gcd(self, other) -> Poly:
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def reduce(self, gf: GF) -> Poly:
        """Reduce an integer polynomial into ``gf``."""
        if self.ring != QQ:
            raise ValueError("reduce expects an integer polynomial")
        vals = []
        for c in self.coeffs:
            c = Fraction(c)
            vals.append(gf.div(int(c.numerator) % gf.p, int(c.denominator) % gf.p))
        return Poly._raw(vals, gf)


# ---------------------------------------------------------------------------
# roots, splitting, resultants


def _equal_degree_linear_split(h: Poly) -> list[int]:
    """Roots of a monic squarefree product of distinct linear factors."""
    if h.degree == 0:
        return []
    if h.degree == 1:
        return [h.ring.neg(h.coeffs[0])]
    R = h.ring
    e = (R.q - 1) // 2
    for delta in range(R.q):
        w = Poly._raw([delta, 1], R).powmod(e, h) - 1
        d = h.gcd(w)
        if 0 < d.degree < h.degree:
            return _equal_degree_linear_split(d) + _equal_degree_linear_split(h // d)
    raise RuntimeError("splitting failed")  # pragma: no cover


def roots_in_field(f: Poly) -> list:
    """All roots of ``f`` in its coefficient field, listed with multiplicity."""
    if f.is_zero():
        raise ValueError("undefined roots")
    R = f.ring
    if not isinstance(R, GF):
        raise ValueError("roots_in_field needs a finite-field polynomial")
    g = f.monic()
    if g.degree == 0:
        return []
    x = Poly.x(R)
    h = g.gcd(x.powmod(R.q, g) - x)
    distinct = sorted(_equal_degree_linear_split(h))
    out = []
    for r in distinct:
        lin = Poly._raw([R.neg(r), 1], R)
        cur = g
        while cur.degree >= 1:
            q_, rem = cur.divmod(lin)
            if not rem.is_zero():
                break
            out.append(R(r))
            cur = q_
    return out


def splits_completely_nonzero(f: Poly) -> bool:
    """True iff ``f`` is a product of linear factors with nonzero roots."""
    if f.is_zero():
        raise ValueError("undefined roots")
    g = f.monic()
    if g.coeffs[0] == 0:
        return False
    return len(roots_in_field(g)) == g.degree


def resultant(f: Poly, g: Poly):
    """Resultant by the Euclidean recursion; exact over QQ or a finite field."""
    if f.ring != g.ring:
        raise ValueError("polynomials over different rings")
    R = f.ring
    if f.is_zero() or g.is_zero():
        return R.zero
    res = R.one
    a, b = f, g
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return R.mul(res, _rpow(R, b.lc, m))
        r = a % b
        if r.is_zero():
            return R.zero
        if (m * n) % 2:
            res = R.neg(res)
        res = R.mul(res, _rpow(R, b.lc, m - r.degree))
        a, b = b, r


def _rpow(R, a, e):
    out = R.one
    for _ in range(e):
        out = R.mul(out, a)
    return out


def discriminant(f: Poly):
    """(-1)^{d(d-1)/2} Res(f, f') / lc(f); an exact integer for integer f."""
    if f.is_zero() or f.degree < 2:
        raise ValueError("degree too small")
    R = f.ring
    d = f.degree
    res = resultant(f, f.derivative())
    if (d * (d - 1) // 2) % 2:
        res = R.neg(res)
    out = R.div(res, f.lc)
    if R == QQ and isinstance(out, Fraction):
        raise ArithmeticError("non-integral discriminant")  # pragma: no cover
    return out


def int_poly(coeffs: Sequence[int]) -> Poly:
    return Poly([int(c) for c in coeffs], QQ)


def poly_mod(coeffs: Sequence[int], p: int) -> Poly:
    """Integer coefficients reduced into F_p."""
    return Poly._raw([int(c) % p for c in coeffs], field(p))
