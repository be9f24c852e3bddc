"""Counting the Borel, unipotent and torus slices of GSp4 over small prime fields.

Run: python3 demos/census_tour.py
"""
from langtrotter import census, gsp4

# The group itself first: the constructive count of symplectic bases
# reproduces |Sp4(F_q)| without listing matrices.
for q in (3, 5, 7):
    print(f"|Sp4(F_{q})| = {gsp4.count_symplectic_bases(q)}  (closed form {gsp4.sp4_order(q)})")

# One full report.  At l = 5 the Borel and H counts are also checked by
# filtering every upper-triangular matrix.
print()
print(census.census_report(5, with_slopes=False).summary())

# How the counts scale with l.  The fitted slopes over l in {5, 7, 11, 13}
# sit near, but not exactly on, the leading exponents: lower-order factors
# such as (l - 1)^3 still bend the curve at this range.
print()
for name, slope in census.slope_sweep().items():
    print(f"  slope {name:10s} {slope:.3f}  (leading exponent {census.SET_TARGETS[name](1)})")

# The coset trace-zero count at l = 3 is identical for both units.
print()
for b in (1, 2):
    c = census.count_coset_trace_zero(3, b=b)
    print(f"  g11 + g22 + {b}(g33 + g44) = 0 : {c.count:.0f} elements")
