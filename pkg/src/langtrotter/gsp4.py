"""GSp4 over finite fields and the group scheme G of pairs (g, nu).

Membership is relative to the fixed antidiagonal form ``J`` below:
``g^t J g = nu J``.  The associated alternating pairing on column vectors is
``omega(u, v) = u0 v3 + u1 v2 - u2 v1 - u3 v0``; a matrix is a member with
similitude nu exactly when its columns satisfy ``omega(c1, c4) =
omega(c2, c3) = nu`` and all other column pairings vanish.

Two representations coexist.  :class:`GSpMatrix` is an immutable, hashable
single element.  The enumeration and sampling routines work on batches: int64
arrays of shape ``(N, 4, 4)`` holding encoded field elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from sympy import factorint

from .ffield import GF, Poly, field

J = np.array([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]], dtype=np.int64)

# exhaustive-enumeration budgets: slice -> largest q allowed
ENUMERATION_BUDGET = {"sp4": 3, "gsp4": 3, "upper": 7, "unipotent": 13, "borel": 13}


class BudgetExceeded(ValueError):
    """Requested enumeration is outside the hard-coded desk budget."""


def field_for_q(q: int) -> GF:
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = fac.items()
    return field(int(p), int(k))


# ---------------------------------------------------------------------------
# splitting types and the product ring O_F (x) F_l


@dataclass(frozen=True)
class SplittingType:
    """Residue degrees of an unramified prime ``prime`` in F."""

    prime: int
    residue_degrees: tuple[int, ...] = (1,)

    def __post_init__(self):
        object.__setattr__(self, "residue_degrees", tuple(int(f) for f in self.residue_degrees))
        if not self.residue_degrees or min(self.residue_degrees) < 1:
            raise ValueError("residue degrees must be positive")
        if self.n > 4:
            raise ValueError("[F:Q] <= 4 supported")
        field(self.prime)  # validates the prime

    @property
    def n(self) -> int:
        return sum(self.residue_degrees)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(self.prime**f for f in self.residue_degrees)

    def fields(self) -> tuple[GF, ...]:
        return tuple(field(self.prime, f) for f in self.residue_degrees)

    @classmethod
    def split(cls, prime: int, n: int) -> SplittingType:
        return cls(prime, (1,) * n)


# ---------------------------------------------------------------------------
# batched arithmetic on encoded arrays


def matmul(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if F.k == 1:
        return np.matmul(A, B) % F.p
    prod = F.mul(A[..., :, :, None], B[..., None, :, :])
    acc = prod[..., 0, :]
    for k in range(1, A.shape[-1]):
        acc = F.add(acc, prod[..., k, :])
    return acc


def omega(F: GF, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Alternating pairing of (broadcastable) vectors along the last axis."""
    if F.k == 1:
        return (u[..., 0] * v[..., 3] + u[..., 1] * v[..., 2] - u[..., 2] * v[..., 1] - u[..., 3] * v[..., 0]) % F.p
    m = F.mul
    s = F.add(m(u[..., 0], v[..., 3]), m(u[..., 1], v[..., 2]))
    t = F.add(m(u[..., 2], v[..., 1]), m(u[..., 3], v[..., 0]))
    return F.sub(s, t)


def gram(F: GF, M: np.ndarray) -> np.ndarray:
    """``M^t J M`` for a batch of matrices."""
    JM = np.stack([M[..., 3, :], M[..., 2, :], F.neg(M[..., 1, :]), F.neg(M[..., 0, :])], axis=-2)
    return matmul(F, np.swapaxes(M, -1, -2), JM)


def similitudes(F: GF, M: np.ndarray) -> np.ndarray:
    """Similitude of each matrix in the batch, or -1 for non-members."""
    W = gram(F, M)
    nu = W[..., 0, 3]
    target = np.zeros_like(W)
    target[..., 0, 3] = nu
    target[..., 1, 2] = nu
    target[..., 2, 1] = F.neg(nu)
    target[..., 3, 0] = F.neg(nu)
    ok = np.all(W == target, axis=(-1, -2)) & (nu != 0)
    return np.where(ok, nu, -1)


def traces(F: GF, M: np.ndarray) -> np.ndarray:
    acc = M[..., 0, 0]
    for i in range(1, 4):
        acc = F.add(acc, M[..., i, i])
    return acc


def _det2(F, a, b, c, d):
    return F.sub(F.mul(a, d), F.mul(b, c))


def _det_rows(F: GF, M: np.ndarray, rows: Sequence[int], cols: Sequence[int]):
    """Determinant of a principal-style minor by cofactor expansion."""
    if len(rows) == 1:
        return M[..., rows[0], cols[0]]
    if len(rows) == 2:
        (i, j), (k, l) = rows, cols
        return _det2(F, M[..., i, k], M[..., i, l], M[..., j, k], M[..., j, l])
    acc = None
    for t, c in enumerate(cols):
        sub = _det_rows(F, M, rows[1:], [x for x in cols if x != c])
        term = F.mul(M[..., rows[0], c], sub)
        if t % 2:
            term = F.neg(term)
        acc = term if acc is None else F.add(acc, term)
    return acc


def charpoly_batch(F: GF, M: np.ndarray) -> np.ndarray:
    """Coefficients ``(c0, c1, c2, c3)`` of det(XI - M) = X^4 + c3 X^3 + ... ."""
    from itertools import combinations

    e = []
    for size in (1, 2, 3, 4):
        acc = None
        for idx in combinations(range(4), size):
            d = _det_rows(F, M, list(idx), list(idx))
            acc = d if acc is None else F.add(acc, d)
        e.append(acc)
    e1, e2, e3, e4 = e
    return np.stack([e4, F.neg(e3), e2, F.neg(e1)], axis=-1)


def inverses(F: GF, M: np.ndarray, nu: np.ndarray) -> np.ndarray:
    """Inverse of members: ``g^{-1} = nu^{-1} J^{-1} g^t J``."""
    gt = np.swapaxes(M, -1, -2)
    # Y = g^t J: columns (-c3, -c2, c1, c0)
    Y = np.stack([F.neg(gt[..., :, 3]), F.neg(gt[..., :, 2]), gt[..., :, 1], gt[..., :, 0]], axis=-1)
    # J^{-1} Y = -J Y: rows (-r3, -r2, r1, r0)
    X = np.stack([F.neg(Y[..., 3, :]), F.neg(Y[..., 2, :]), Y[..., 1, :], Y[..., 0, :]], axis=-2)
    return F.mul(X, F.inv(np.asarray(nu))[..., None, None])


# ---------------------------------------------------------------------------
# single elements


def berkowitz(F: GF, A: Sequence[Sequence[int]]) -> list[int]:
    """Division-free characteristic polynomial, coefficients highest first."""
    n = len(A)
    vect = [1, F.neg(A[0][0])]
    for r in range(1, n):
        R = [A[r][j] for j in range(r)]
        C = [A[i][r] for i in range(r)]
        sub = [[A[i][j] for j in range(r)] for i in range(r)]
        col = [1, F.neg(A[r][r])]
        v = C
        for _ in range(r):
            dot = 0
            for x, y in zip(R, v):
                dot = F.add(dot, F.mul(x, y))
            col.append(F.neg(dot))
            v = [
                _dot(F, sub[i], v)
                for i in range(r)
            ]
        new = []
        for i in range(r + 2):
            acc = 0
            for j in range(r + 1):
                if 0 <= i - j < len(col):
                    acc = F.add(acc, F.mul(col[i - j], vect[j]))
            new.append(acc)
        vect = new
    return vect


def _dot(F, a, b):
    acc = 0
    for x, y in zip(a, b):
        acc = F.add(acc, F.mul(x, y))
    return acc


@dataclass(frozen=True)
class GSpMatrix:
    """A member of GSp4 over ``gf`` with its similitude (both encoded)."""

    gf: GF
    entries: tuple[int, ...]
    nu: int

    def __post_init__(self):
        if len(self.entries) != 16:
            raise ValueError("expected 16 entries")
        nu = similitude_of(np.array(self.entries, dtype=np.int64).reshape(4, 4), self.gf)
        if nu is None or nu != self.nu:
            raise ValueError("not a member of GSp4 with the stated similitude")

    @classmethod
    def from_array(cls, gf: GF, M) -> GSpMatrix:
        M = np.asarray(M, dtype=np.int64) % gf.q if gf.k == 1 else np.asarray(M, dtype=np.int64)
        nu = similitude_of(M, gf)
        if nu is None:
            raise ValueError("not a member of GSp4")
        return cls(gf, tuple(int(v) for v in M.ravel()), nu)

    @classmethod
    def identity(cls, gf: GF) -> GSpMatrix:
        return cls.from_array(gf, np.eye(4, dtype=np.int64))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(4, 4)

    @property
    def similitude(self):
        return self.gf(self.nu)

    def __matmul__(self, other: GSpMatrix) -> GSpMatrix:
        if other.gf != self.gf:
            raise ValueError("different fields")
        return GSpMatrix.from_array(self.gf, matmul(self.gf, self.array, other.array))

    def inverse(self) -> GSpMatrix:
        return GSpMatrix.from_array(self.gf, inverses(self.gf, self.array[None], np.array([self.nu]))[0])

    def trace(self) -> int:
        return int(traces(self.gf, self.array))

    def charpoly(self) -> Poly:
        return charpoly(self)

    def __repr__(self):
        return f"GSpMatrix({self.array.tolist()}, nu={self.nu}, {self.gf!r})"


def similitude_of(M, gf: GF | None = None):
    """Similitude of ``M`` (encoded), or ``None`` when M is not a member.

    ``M`` may also be a sequence of matrices over the factors of a product
    ring, given with a matching sequence of fields; the result is then the
    tuple of componentwise similitudes.
    """
    if gf is None:
        raise ValueError("a coefficient field is required")
    if isinstance(gf, (list, tuple)):
        out = []
        for Mi, Fi in zip(M, gf):
            nu = similitude_of(Mi, Fi)
            if nu is None:
                return None
            out.append(nu)
        return tuple(out)
    M = np.asarray(M, dtype=np.int64)
    if M.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    nu = int(similitudes(gf, M[None])[0])
    return None if nu < 0 else nu


def charpoly(M: GSpMatrix) -> Poly:
    """Monic characteristic quartic with the symplectic functional equation checked."""
    F = M.gf
    A = M.array.tolist()
    coeffs = berkowitz(F, A)[::-1]
    P = Poly._raw(coeffs, F)
    tr = M.trace()
    if P.coeffs[1] != F.neg(F.mul(tr, M.nu)) or P.coeffs[0] != F.mul(M.nu, M.nu):
        raise ArithmeticError("functional equation fails: corrupted member")
    return P


def borel_element(gf: GF, a, b, c, n=0, r=0, s=0, t=0) -> GSpMatrix:
    """Torus x short-root unipotent x long-root unipotent product."""
    return GSpMatrix.from_array(gf, borel_arrays(gf, *(np.atleast_1d(v) for v in (a, b, c, n, r, s, t)))[0])


def borel_arrays(gf: GF, a, b, c, n, r, s, t) -> np.ndarray:
    """Vectorized Borel parametrization over broadcast parameter arrays."""
    a, b, c, n, r, s, t = np.broadcast_arrays(*(np.asarray(v, dtype=np.int64) for v in (a, b, c, n, r, s, t)))
    if np.any(a == 0) or np.any(b == 0) or np.any(c == 0):
        raise ValueError("torus parameters a, b, c must be units")
    shape = a.shape
    F = gf
    T = np.zeros(shape + (4, 4), dtype=np.int64)
    T[..., 0, 0] = a
    T[..., 1, 1] = b
    T[..., 2, 2] = F.mul(c, F.inv(b))
    T[..., 3, 3] = F.mul(c, F.inv(a))
    N = np.zeros(shape + (4, 4), dtype=np.int64)
    for i in range(4):
        N[..., i, i] = 1
    N[..., 0, 1] = n
    N[..., 2, 3] = F.neg(n)
    V = np.zeros(shape + (4, 4), dtype=np.int64)
    for i in range(4):
        V[..., i, i] = 1
    V[..., 0, 2] = r
    V[..., 0, 3] = s
    V[..., 1, 2] = t
    V[..., 1, 3] = r
    return matmul(F, matmul(F, T, N), V).reshape(shape + (4, 4))


@dataclass(frozen=True)
class GroupPoint:
    """A pair (g, nu) of G(F_l): components of g over each residue field."""

    components: tuple[GSpMatrix, ...]
    nu: int
    weight_exponent: int = 1

    def __post_init__(self):
        if not self.components:
            raise ValueError("need at least one component")
        p = self.components[0].gf.p
        if not 0 < self.nu < p:
            raise ValueError("nu must be a unit of F_l")
        target = pow(self.nu, self.weight_exponent, p)
        for g in self.components:
            if g.gf.p != p or g.nu != target:
                raise ValueError("simil(g) != nu^c in some factor")


# ---------------------------------------------------------------------------
# orders


def sp4_order(q: int) -> int:
    return q**4 * (q**2 - 1) * (q**4 - 1)


def order_formulas(q: int, which: str, splitting: SplittingType | None = None, weight_exponent: int = 1) -> int:
    """Closed-form group orders.

    For ``which='G'`` every nu in F_l^x contributes one coset of
    prod_i Sp4(F_{l^{f_i}}) whatever the weight exponent (pairs are counted).
    """
    if which == "sp4":
        return sp4_order(q)
    if which == "gsp4":
        return (q - 1) * sp4_order(q)
    if which == "G":
        if splitting is None:
            splitting = SplittingType(q, (1,))
        if splitting.prime != q:
            raise ValueError("splitting type is for a different prime")
        return (q - 1) * math.prod(sp4_order(Q) for Q in splitting.sizes)
    raise ValueError(f"unknown group {which!r}")


def all_vectors(F: GF) -> np.ndarray:
    q = F.q
    g = np.indices((q,) * 4).reshape(4, -1).T
    return g.astype(np.int64)


def count_symplectic_bases(q: int, spot_checks: int = 16, seed: int = 0) -> int:
    """|Sp4(F_q)| as the number of ordered hyperbolic bases (e1, f1, e2, f2).

    Every choice is enumerated for the first pair; the count of second pairs
    is enumerated in the complement of one fixed first pair and confirmed to
    be the same for randomly chosen other first pairs.
    """
    F = field_for_q(q)
    V = all_vectors(F)
    nonzero = V[np.any(V != 0, axis=1)]
    table = omega(F, nonzero[:, None, :], nonzero[None, :, :])
    first_pairs = int(np.count_nonzero(table == 1))

    def second_pairs(e1, f1) -> int:
        perp = V[(omega(F, V, e1[None]) == 0) & (omega(F, V, f1[None]) == 0)]
        perp = perp[np.any(perp != 0, axis=1)]
        t = omega(F, perp[:, None, :], perp[None, :, :])
        return int(np.count_nonzero(t == 1))

    rows, cols = np.nonzero(table == 1)
    base = second_pairs(nonzero[rows[0]], nonzero[cols[0]])
    rng = np.random.default_rng(seed)
    for i in rng.integers(0, len(rows), size=spot_checks):
        if second_pairs(nonzero[rows[i]], nonzero[cols[i]]) != base:
            raise ArithmeticError("second-pair count depends on the first pair")
    return first_pairs * base


# ---------------------------------------------------------------------------
# exhaustive enumeration by column filtering


def _candidate_columns(F: GF, group_slice: str) -> list[np.ndarray]:
    q = F.q
    V = all_vectors(F)
    if group_slice in ("sp4", "gsp4"):
        return [V, V, V, V]
    if group_slice == "upper":
        return [V[np.all(V[:, j + 1:] == 0, axis=1)] for j in range(4)]
    if group_slice == "unipotent":
        cols = []
        for j in range(4):
            sel = np.all(V[:, j + 1:] == 0, axis=1) & (V[:, j] == 1)
            cols.append(V[sel])
        return cols
    raise ValueError(f"unknown slice {group_slice!r}")


def _check_budget(group_slice: str, q: int) -> None:
    if group_slice not in ENUMERATION_BUDGET:
        raise ValueError(f"unknown slice {group_slice!r}")
    if q > ENUMERATION_BUDGET[group_slice]:
        raise BudgetExceeded(
            f"budget exceeded: slice {group_slice!r} allows q <= {ENUMERATION_BUDGET[group_slice]}, got {q}"
        )


def enumerate_arrays(group_slice: str, q: int, chunk: int = 1 << 22) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Batches ``(matrices, similitudes)`` covering the slice exactly once.

    Slices: ``sp4`` and ``gsp4`` (all 4x4 matrices, q = 3), ``upper`` (all
    upper-triangular matrices), ``unipotent`` (unit diagonal) and ``borel``
    (image of the Borel parametrization, one matrix per parameter tuple).
    """
    _check_budget(group_slice, q)
    F = field_for_q(q)
    if group_slice == "borel":
        yield from _borel_batches(F)
        return
    S = _candidate_columns(F, group_slice)
    W = {(i, j): omega(F, S[i][:, None, :], S[j][None, :, :]) for i in range(4) for j in range(i + 1, 4)}
    symplectic = group_slice in ("sp4", "unipotent")
    m2, m3, m4 = len(S[1]), len(S[2]), len(S[3])
    bstep = max(1, chunk // max(1, m3 * m4))
    for a in range(len(S[0])):
        w14 = W[0, 3][a]
        dmask = w14 != 0
        if symplectic:
            dmask &= w14 == 1
        b_ok = np.nonzero(W[0, 1][a] == 0)[0]
        c_ok = np.nonzero(W[0, 2][a] == 0)[0]
        d_ok = np.nonzero(dmask)[0]
        if not (len(b_ok) and len(c_ok) and len(d_ok)):
            continue
        w34 = W[2, 3][np.ix_(c_ok, d_ok)] == 0
        w14d = w14[d_ok]
        for start in range(0, len(b_ok), bstep):
            bs = b_ok[start:start + bstep]
            w24 = W[1, 3][np.ix_(bs, d_ok)] == 0
            w23 = W[1, 2][np.ix_(bs, c_ok)]
            mask = w24[:, None, :] & w34[None, :, :] & (w23[:, :, None] == w14d[None, None, :])
            ib, ic, idd = np.nonzero(mask)
            if not len(ib):
                continue
            cols = [
                np.broadcast_to(S[0][a], (len(ib), 4)),
                S[1][bs[ib]],
                S[2][c_ok[ic]],
                S[3][d_ok[idd]],
            ]
            mats = np.stack(cols, axis=-1)
            yield mats, w14d[idd]


def _borel_batches(F: GF):
    q = F.q
    units = F.units()
    elts = F.elements()
    nrst = np.stack(np.meshgrid(elts, elts, elts, elts, indexing="ij"), axis=-1).reshape(-1, 4)
    for a in units:
        for b in units:
            for c in units:
                mats = borel_arrays(F, a, b, c, nrst[:, 0], nrst[:, 1], nrst[:, 2], nrst[:, 3])
                yield mats, np.full(len(mats), c, dtype=np.int64)


def enumerate_slice(group_slice: str, q: int) -> Iterator[GSpMatrix]:
    """Stream each element of the slice once as a :class:`GSpMatrix`."""
    F = field_for_q(q)
    for mats, nus in enumerate_arrays(group_slice, q):
        for M, nu in zip(mats, nus):
            yield GSpMatrix(F, tuple(int(v) for v in M.ravel()), int(nu))


def count_slice(group_slice: str, q: int) -> int:
    return sum(len(m) for m, _ in enumerate_arrays(group_slice, q))


# ---------------------------------------------------------------------------
# uniform sampling


def _random_vectors(F: GF, n: int, rng) -> np.ndarray:
    return rng.integers(0, F.q, size=(n, 4), dtype=np.int64)


def _draw(F: GF, size: int, rng, accept, transform=None) -> np.ndarray:
    """Uniform rows (optionally transformed), redrawn where rejected.

    ``accept(v, idx)`` and ``transform(v, idx)`` see only the rows ``idx``.
    """
    idx = np.arange(size)
    out = np.empty((size, 4), dtype=np.int64)
    while len(idx):
        v = _random_vectors(F, len(idx), rng)
        if transform is not None:
            v = transform(v, idx)
        out[idx] = v
        idx = idx[~accept(v, idx)]
    return out


def random_sp4(F: GF, size: int, rng: np.random.Generator) -> np.ndarray:
    """Exactly uniform samples of Sp4(F) via random hyperbolic bases."""
    e1 = _draw(F, size, rng, lambda v, i: np.any(v != 0, axis=1))
    f1 = _draw(F, size, rng, lambda v, i: omega(F, e1[i], v) != 0)
    f1 = F.mul(f1, F.inv(omega(F, e1, f1))[:, None])

    def proj(v, i):
        # projection onto the orthogonal complement of <e1, f1>
        a = omega(F, v, f1[i])[:, None]
        b = omega(F, v, e1[i])[:, None]
        return F.add(F.sub(v, F.mul(a, e1[i])), F.mul(b, f1[i]))

    e2 = _draw(F, size, rng, lambda w, i: np.any(w != 0, axis=1), proj)
    f2 = _draw(F, size, rng, lambda w, i: omega(F, e2[i], w) != 0, proj)
    f2 = F.mul(f2, F.inv(omega(F, e2, f2))[:, None])
    return np.stack([e1, e2, f2, f1], axis=-1)


def random_gsp4(F: GF, size: int, rng: np.random.Generator, similitude_values=None) -> tuple[np.ndarray, np.ndarray]:
    """Uniform samples of the members whose similitude lies in ``similitude_values``.

    Each similitude class is a coset ``diag(1,1,mu,mu) Sp4``, so a uniform
    similitude followed by a uniform Sp4 element is uniform on the union.
    """
    if similitude_values is None:
        similitude_values = F.units()
    vals = np.asarray(similitude_values, dtype=np.int64)
    mu = vals[rng.integers(0, len(vals), size=size)]
    g = random_sp4(F, size, rng)
    g[:, 2, :] = F.mul(g[:, 2, :], mu[:, None])
    g[:, 3, :] = F.mul(g[:, 3, :], mu[:, None])
    return g, mu
