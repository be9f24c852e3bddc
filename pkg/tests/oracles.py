"""Slow, independent reference computations used only by the tests.

Nothing here imports the package; each routine is the most literal
definition available, so agreement with the library is meaningful.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

J = np.array([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]])


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def primes_upto(x: int) -> list[int]:
    return [p for p in range(2, int(x) + 1) if is_prime(p)]


# ---------------------------------------------------------------------------
# symplectic groups mod 3 by brute force


def all_column_vectors(p: int) -> np.ndarray:
    return np.array(np.meshgrid(*[np.arange(p)] * 4, indexing="ij")).reshape(4, -1).T


def gsp4_similitude_histogram_mod3() -> dict[int, int]:
    """nu -> #{M in M_4(F_3) : M^t J M = nu J}, scanning all 3^16 matrices.

    M^t J M has (i, j) entry c_i^t J c_j for the columns c_i, so the whole
    scan reduces to looking up a table of pairings over 81^4 column tuples.
    """
    p = 3
    V = all_column_vectors(p)
    W = (V @ J @ V.T) % p  # W[i, j] = c_i^t J c_j
    n = len(V)
    hist = {0: 0, 1: 0, 2: 0}
    j, k, l = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    j, k, l = j.ravel(), k.ravel(), l.ravel()
    for i in range(n):
        nu = W[i, l]
        ok = (W[j, k] == nu) & (W[i, j] == 0) & (W[i, k] == 0) & (W[j, l] == 0) & (W[k, l] == 0)
        for v in (1, 2):
            hist[v] += int(np.count_nonzero(ok & (nu == v)))
    return hist


def upper_triangular_members(p: int, equal_diagonal: bool = False) -> list[tuple[np.ndarray, int]]:
    """Upper-triangular members of GSp4(F_p) with their similitude (p <= 5)."""
    diag_vals = range(1, p)
    ups = np.array(np.meshgrid(*[np.arange(p)] * 6, indexing="ij")).reshape(6, -1).T
    iu = np.triu_indices(4, 1)
    out = []
    diags = [(d, d, d, d) for d in diag_vals] if equal_diagonal else [
        (a, b, c, d) for a in diag_vals for b in diag_vals for c in diag_vals for d in diag_vals
    ]
    for dg in diags:
        M = np.zeros((len(ups), 4, 4), dtype=np.int64)
        M[:, iu[0], iu[1]] = ups
        M[:, range(4), range(4)] = dg
        G = np.einsum("nji,jk,nkl->nil", M, J, M) % p
        nu = G[:, 0, 3]
        target = np.zeros_like(G)
        target[:, 0, 3] = nu
        target[:, 1, 2] = nu
        target[:, 2, 1] = (-nu) % p
        target[:, 3, 0] = (-nu) % p
        ok = np.all(G == target, axis=(1, 2)) & (nu != 0)
        out.extend((M[i], int(nu[i])) for i in np.nonzero(ok)[0])
    return out


# ---------------------------------------------------------------------------
# point counts


def _eval_mod(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def brute_count_fp(coeffs, p: int) -> int:
    """#C(F_p) for y^2 = f(x) by scanning all (x, y) plus points at infinity."""
    squares = [0] * p
    for y in range(p):
        squares[y * y % p] += 1
    affine = sum(squares[_eval_mod(coeffs, x, p)] for x in range(p))
    deg = len(coeffs) - 1
    if deg % 2:
        return affine + 1
    lc = coeffs[-1] % p
    return affine + (2 if pow(lc, (p - 1) // 2, p) == 1 else 0)


def _fp2_nonresidue(p: int) -> int:
    for n in range(2, p):
        if pow(n, (p - 1) // 2, p) == p - 1:
            return n
    raise ValueError


def brute_count_fp2(coeffs, p: int) -> int:
    """#C(F_{p^2}) with F_{p^2} = F_p[t]/(t^2 - n), scanning all x and all y."""
    n = _fp2_nonresidue(p)
    u, v = np.meshgrid(np.arange(p), np.arange(p), indexing="ij")
    u, v = u.ravel().astype(np.int64), v.ravel().astype(np.int64)

    def mul(a0, a1, b0, b1):
        return (a0 * b0 + n * a1 * b1) % p, (a0 * b1 + a1 * b0) % p

    sq0, sq1 = mul(u, v, u, v)
    sqcount = np.bincount(sq0 * p + sq1, minlength=p * p)
    f0 = np.full_like(u, coeffs[-1] % p)
    f1 = np.zeros_like(u)
    for c in reversed(coeffs[:-1]):
        f0, f1 = mul(f0, f1, u, v)
        f0 = (f0 + c) % p
    affine = int(sqcount[f0 * p + f1].sum())
    deg = len(coeffs) - 1
    return affine + (1 if deg % 2 else 2)  # every element of F_p is a square in F_{p^2}


def frobenius_from_counts(p: int, n1: int, n2: int) -> tuple[int, int]:
    """(a_p, b_p) from #C(F_p) and #C(F_{p^2})."""
    s1 = p + 1 - n1
    s2 = p * p + 1 - n2
    e2 = Fraction(s1 * s1 - s2, 2)
    assert e2.denominator == 1
    return s1, int(e2)


# ---------------------------------------------------------------------------
# polynomials mod l


def splits_by_evaluation(coeffs, ell: int) -> bool:
    """Split test by trying every residue and dividing out roots one at a time."""
    c = [x % ell for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    deg = len(c) - 1
    found = 0
    changed = True
    while changed and len(c) > 1:
        changed = False
        for r in range(ell):
            if _eval_mod(c, r, ell) == 0:
                if r == 0:
                    return False
                # synthetic division by (x - r)
                q = [0] * (len(c) - 1)
                acc = 0
                for i in range(len(c) - 1, 0, -1):
                    acc = (acc * r + c[i]) % ell
                    q[i - 1] = acc
                c = q
                found += 1
                changed = True
                break
    return found == deg


def pi_recount(records, a, x, ell=None, level=1) -> int:
    """Direct count over (p, a_p, quartic) triples."""
    total = 0
    for p, ap, cp in records:
        if p > x or ap != a:
            continue
        if ell is not None:
            if (ell * level) % p == 0:
                continue
            if not splits_by_evaluation(list(cp), ell):
                continue
        total += 1
    return total
