"""
Renyi entropies of a probability vector
=======================================

Computes the Shannon and Renyi entropies of a small vector, the purity
statistics that go with the order-2 entropy, and the full profile H_q.
"""

import numpy as np

import renyix

# A probability vector is validated on construction: components must be
# non-negative and sum to one within 1e-12.
p = renyix.make_prob_vec([0.5, 0.25, 0.25])
print("Shannon entropy H1   :", renyix.shannon(p))
print("collision entropy H2 :", renyix.renyi(p, 2))
print("order three H3       :", renyix.renyi(p, 3))
print("min-entropy H_inf    :", renyix.renyi(p, np.inf))

# Unnormalized data can be rescaled explicitly instead.
counts = renyix.make_prob_vec([10, 5, 5], normalize_mode="renormalize")
print("from counts          :", counts.components)

# exp(-H2) is the index of coincidence, the chance that two draws agree.
stats = renyix.purity_stats(p)
print("coincidence index    :", stats.coincidence_index)
print("participation ratio  :", stats.participation_ratio)
print("linear entropy       :", stats.linear_entropy)
print("structural entropy   :", renyix.structural_entropy(p))

# H_q never increases with q. The profile is evaluated on a sorted grid.
for q, h in renyix.renyi_profile(p, [0, 0.5, 1, 2, 3, 8, np.inf]):
    print(f"  H_{q:<4g} = {h:.6f}")
