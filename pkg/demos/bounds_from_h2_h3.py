"""
Rigorous Shannon entropy bounds from H2 or H3
=============================================

When only the collision entropy H2 (or H3) and the number of outcomes N are
known, the Shannon entropy is confined to an interval. Its ends are
attained by two families of two-level distributions.
"""

import math

import numpy as np

import renyix
from renyix.interp import InterpDist, interp_vector

N = 3
H2 = math.log(8 / 3)
H3 = 0.5 * math.log(32 / 5)

lo, hi = renyix.shannon_bounds_from_H2(H2, N)
print(f"from H2: {lo.value:.9f} <= H1 <= {hi.value:.9f}  ({lo.rigor})")
lo3, hi3 = renyix.shannon_bounds_from_H3(H3, N)
print(f"from H3: {lo3.value:.9f} <= H1 <= {hi3.value:.9f}")
print("simple upper bound from H2:", renyix.ht_simple_upper(H2, N).value)

# The upper end is reached on the arc Q_{1,N}(a), the lower end on the
# cascade Q_{k-1,k}(a). Recover the two extremal vectors explicitly.
a_top = renyix.invert_a_from_H2_top(H2, N)
k = renyix.select_arc(H2, N)
a_bot = renyix.invert_a_from_H2_bottom(H2, k)
print("upper extremal vector:", interp_vector(InterpDist(1, N, a_top)).components)
print("lower extremal vector:", interp_vector(InterpDist(k - 1, k, a_bot)).components)

# The same construction bounds any order q from any other order s.
lo4, hi4 = renyix.ht_general_bounds(0.9, s=4, q=1, N=5)
print(f"from H4 = 0.9 at N = 5: {lo4.value:.6f} <= H1 <= {hi4.value:.6f}")

# Every random vector respects the interval.
rng = np.random.default_rng(1)
for x in rng.dirichlet(np.ones(6), 5):
    h1, h2 = renyix.shannon(x), renyix.renyi(x, 2)
    l, u = renyix.shannon_bounds_from_H2(h2, 6)
    print(f"  {l.value:.4f} <= {h1:.4f} <= {u.value:.4f}")
