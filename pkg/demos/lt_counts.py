"""Lang-Trotter counts for x^5 + x + 1 next to the predicted growth curves.

Run: python3 demos/lt_counts.py   (about ten seconds)
"""
from langtrotter import genus2, ltlab

curve = genus2.FIXED_CURVES[0]
recs = ltlab.curve_records(curve, 10**5, a_values={0, 1, 2})
grid = [10**3, 10**4, 10**5]

print(f"{'a':>3} {'x':>7} {'pi_f':>6} {'uncond':>10} {'grh':>10}")
for a in (0, 1, 2):
    table = ltlab.tabulate_pi_f(recs, a, grid)
    for row in table.rows:
        print(f"{a:3d} {row.x:7d} {row.count:6d} {row.bound_unconditional:10.1f} {row.bound_grh:10.1f}")

# Adding the condition that l splits completely in the Frobenius field
# cuts the count by roughly the density of split elements.
print()
for ell in (5, 7, 13):
    sc = ltlab.pi_x_a_l(recs, 0, ell, 10**5)
    print(f"  pi(1e5, 0; {ell:2d}) = {sc.count}")

rep = ltlab.murty_interval_report(recs, 0, 10**5)
print(f"\nbest l in [{rep.interval[0]:.1f}, {rep.interval[1]:.1f}] catches {rep.max_count} of {rep.pi_f} primes")
