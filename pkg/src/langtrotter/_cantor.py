"""Cantor's algorithm on Jacobians of y^2 = f(x), f monic of degree 5, over F_p.

Divisor classes are Mumford pairs ``(u, v)`` of coefficient tuples (lowest
first) with u monic, deg v < deg u <= 2 and u | v^2 - f.  Only used to tell
apart the few Weil-admissible candidates for #J(F_p).
"""

from __future__ import annotations

from sympy.ntheory import sqrt_mod


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % p for v in out])


def _divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) - 1 < db:
        return [], _trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv % p
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(q), _trim([v % p for v in a[:db]])


def _monic(a, p):
    inv = pow(a[-1], -1, p)
    return [v * inv % p for v in a]


def _xgcd(a, b, p):
    """(d, s, t) with d = s a + t b monic."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return [v * inv % p for v in r0], [v * inv % p for v in s0], [v * inv % p for v in t0]


class Jacobian:
    """Group law on J(F_p) for y^2 = f(x), f monic of degree 5."""

    ZERO = ((1,), ())

    def __init__(self, f, p: int):
        f = _trim([int(c) % p for c in f])
        if len(f) != 6 or f[-1] != 1:
            raise ValueError("expected a monic quintic")
        self.f = f
        self.p = p

    def add(self, D1, D2):
        p, f = self.p, self.f
        u1, v1 = list(D1[0]), list(D1[1])
        u2, v2 = list(D2[0]), list(D2[1])
        d0, h1, h2 = _xgcd(u1, u2, p)
        if len(d0) == 1:
            u = _mul(u1, u2, p)
            v = _add(_mul(_mul(h1, u1, p), v2, p), _mul(_mul(h2, u2, p), v1, p), p)
            v = _divmod(v, u, p)[1]
        else:
            d, l, h3 = _xgcd(d0, _add(v1, v2, p), p)
            s1, s2 = _mul(l, h1, p), _mul(l, h2, p)
            u = _divmod(_mul(u1, u2, p), _mul(d, d, p), p)[0]
            num = _add(
                _add(_mul(_mul(s1, u1, p), v2, p), _mul(_mul(s2, u2, p), v1, p), p),
                _mul(h3, _add(_mul(v1, v2, p), f, p), p),
                p,
            )
            v = _divmod(_divmod(num, d, p)[0], u, p)[1]
        while len(u) - 1 > 2:
            u = _divmod(_sub(f, _mul(v, v, p), p), u, p)[0]
            u = _monic(u, p)
            v = _divmod([(-c) % p for c in v], u, p)[1]
        u = _monic(u, p)
        return tuple(u), tuple(v)

    def neg(self, D):
        return D[0], tuple((-c) % self.p for c in D[1])

    def mul(self, n: int, D):
        if n < 0:
            return self.mul(-n, self.neg(D))
        result = self.ZERO
        base = D
        while n:
            if n & 1:
                result = self.add(result, base)
            n >>= 1
            if n:
                base = self.add(base, base)
        return result

    def random_point(self, rng):
        """Class of P - infinity for a random affine point P."""
        p, f = self.p, self.f
        while True:
            x0 = int(rng.integers(0, p))
            val = 0
            for c in reversed(f):
                val = (val * x0 + c) % p
            if val == 0:
                return ((-x0) % p, 1), ()
            r = sqrt_mod(val, p)
            if r is not None:
                y0 = r if rng.integers(0, 2) else (-r) % p
                return ((-x0) % p, 1), (y0,) if y0 else ()

    def random_element(self, rng):
        return self.add(self.random_point(rng), self.random_point(rng))


def monic_quintic_model(f, p: int, twist: int = 1):
    """Coefficients of a monic quintic g with y^2 = twist*f(x) isomorphic to y^2 = g(X).

    Uses x = X/c, y = Y/c^2 with c the leading coefficient of twist*f.
    """
    f = [int(twist) * int(v) % p for v in f]
    if len(_trim(f)) != 6:
        raise ValueError("expected degree 5")
    c = f[5]
    cinv = pow(c, -1, p)
    out = []
    for k, fk in enumerate(f):
        e = 4 - k
        out.append(fk * (pow(c, e, p) if e >= 0 else cinv) % p)
    return out
