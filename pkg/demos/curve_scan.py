"""Frobenius data for a genus-2 curve, and how large its discriminants get.

Run: python3 demos/curve_scan.py
"""
import numpy as np

from langtrotter import genus2

curve = genus2.FIXED_CURVES[0]
good, bad = genus2.good_primes(curve, 2000)
print(f"curve {curve.label}: f = {curve.f_coeffs}, bad primes below 2000: {bad}")

recs = genus2.frobenius_records(curve, 2000)
for r in recs[:6]:
    print(f"  p={r.p:4d}  a_p={r.a_p:4d}  b_p={r.b_p:5d}  charpoly {r.charpoly}")

# Normalised traces a_p / sqrt(p) live in [-4, 4].
t = np.array([r.a_p / np.sqrt(r.p) for r in recs])
hist, edges = np.histogram(t, bins=8, range=(-4, 4))
print("\nnormalised trace histogram")
for lo, n in zip(edges, hist):
    print(f"  [{lo:+.0f}, {lo + 1:+.0f})  {'#' * (n // 4)} {n}")

# Discriminant growth: log|disc| / log p stays well below the a priori 12 + slack.
scan = genus2.disc_growth_scan(curve, 2000, recs)
print(f"\nmax log|disc|/log p = {scan.max_ratio:.3f}; repeated-root primes: {scan.degenerate}")
