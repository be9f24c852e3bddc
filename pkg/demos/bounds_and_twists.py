"""Exponent bookkeeping for the bounds, and inner twists of a toy eigenvalue system.

Run: python3 demos/bounds_and_twists.py
"""
import numpy as np

from langtrotter import chebotarev as cb, twists

print("alpha for n = 1, 2")
for n in (1, 2):
    for regime in cb.REGIMES:
        vals = [cb.alpha_value(n, regime, z) for z in (False, True)]
        print(f"  n={n} {regime:13s} a != 0: {vals[0]}   a = 0: {vals[1]}")

# The assembled bound at the optimal l grows like x^(1 - alpha) up to log
# factors.  A straight log-log fit absorbs those factors into the slope; the
# fit with a log log x term recovers the exponent.
xs = np.geomspace(1e8, 1e14, 61)
vals = cb.assembled_bound(xs, 1)
print(f"\n1 - alpha = {1 - float(cb.alpha_value(1, 'grh', False)):.4f}")
print(f"raw log-log slope {cb.loglog_fit(xs, vals):.4f}, log-corrected {cb.power_exponent_fit(xs, vals):.4f}")

# Q(sqrt 2)-valued eigenvalues whose conjugates differ by the character mod 5.
system = twists.synthetic_quadratic_system()
found = twists.detect_inner_twists(system)
ff = twists.fixed_field_degree(found, system)
K = twists.kernel_field(found)
print(f"\ninner twists: {[(t.sigma, t.chi.modulus) for t in found]}")
print(f"[F:Q] = {ff.degree}; K cut out mod {K.modulus} by {sorted(K.subgroup)}")
