"""Random Frobenius classes drawn per prime, and the prime-power weighted count.

Run: python3 demos/simulator.py
"""
import numpy as np

from langtrotter import chebotarev as cb

model = cb.gsp4_trace_classes(3)
print(f"GSp4(F_3) by trace: {model.class_sizes}")
for seed in range(3):
    s = cb.simulate_frobenius(model, 10**6, seed=seed)
    print(f"  seed {seed}: chi-square p = {cb.chi_square_pvalue(s):.3f}")

# With a power map the weighted count also sees p^m; the excess over the
# plain count stays under a small multiple of sqrt(x)/log x.
G = cb.torus_model(5)
s = cb.simulate_frobenius(G.model(), 10**6, seed=1)
C = set(G.elements())
for x in np.geomspace(1e3, 1e6, 4):
    wc = cb.weighted_pi(s, C, x)
    env = cb.difference_envelope([x])[0]
    print(f"  x={x:9.0f}  plain {wc.plain:6d}  weighted {wc.weighted:10.2f}  ratio to envelope {wc.difference / env:.2f}")
