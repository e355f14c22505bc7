"""
Point estimates of the Shannon entropy
======================================

Straight lines through known values of H_q give point estimates of H1.
They are useful in practice but are not bounds: H_q need not be convex in
q, so every estimate carries ``rigor == "heuristic"``.
"""

import numpy as np

import renyix
from renyix.extrapolate import estimates_for_vector

p = [0.5, 0.25, 0.25]
print("true H1:", renyix.shannon(p))
for name, est in estimates_for_vector(p).items():
    print(f"  {name:<14s} {est.value:.6f}  {est.rigor}  inputs={sorted(est.ingredients)}")

# A vector with one large component and many small ones. The midpoint of
# H0 and H2 lands below H1 here, so it is no upper bound.
P = [0.43] + [0.03] * 19
est = estimates_for_vector(P)
print("\ntrue H1:", renyix.shannon(P))
print("H0/H2 midpoint:", est["H_u0"].value)

# The profile bends the wrong way near q = 0.5.
q = np.arange(1, 201) * 0.05
H = np.array([renyix.renyi(P, v) for v in q])
second = np.diff(H, 2)
print("smallest second difference:", second.min(), "at q =", q[1 + second.argmin()])
