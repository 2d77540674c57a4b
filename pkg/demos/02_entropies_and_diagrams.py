"""Entropy functionals and the boundary curves they obey.

For a fixed index of coincidence X = sum p^2, the possible entropy values
form a region whose lower boundary is a polygon through the uniform-
distribution points (1/k, ln_a k).  The same diagram idea bounds the
largest probability and the largest sum of two probabilities.
"""

import numpy as np

from geam import (alpha_log, entropy_floor, index_of_coincidence,
                  max_prob_ceiling, max_prob_floor, pair_prob_ceiling,
                  renyi_entropy, tsallis_entropy, tsallis_to_renyi)

p = np.array([0.5, 0.3, 0.2])
print("distribution:", p)
print("index of coincidence:", index_of_coincidence(p))
for a in (0.5, 1.0, 2.0):
    h = tsallis_entropy(p, a)
    r = renyi_entropy(p, a)
    print(f"  order {a}: tsallis {h:.6f}  renyi {r:.6f}  "
          f"bridge {tsallis_to_renyi(h, a):.6f}")

# --- the polygon floor vs the smooth Jensen curve ---------------------------

print("\nentropy floor at order 1 (natural log units)")
for x in (1.0, 0.5, 0.4, 1 / 3, 0.2):
    print(f"  X = {x:.4f}: floor {entropy_floor(x, 1.0):.6f}   "
          f"smooth ln(1/X) {np.log(1 / x):.6f}")
print("the floor touches ln_a(k) exactly at X = 1/k:")
for k in (2, 3, 4):
    print(f"  k={k}: {entropy_floor(1 / k, 0.8):.12f} "
          f"= {alpha_log(float(k), 0.8):.12f}")

# --- probability bounds at fixed coincidence --------------------------------

print("\nmax-probability window and pair bound for 5 outcomes")
for x in (0.2, 0.26, 0.4):
    lo = max_prob_floor(x)
    hi = max_prob_ceiling(x, 5)
    two = pair_prob_ceiling(x, 5)
    print(f"  X = {x:.2f}: {lo:.4f} <= max p <= {hi:.4f},  "
          f"p_i + p_j <= {two:.4f}")

# --- empirical check on random distributions --------------------------------

rng = np.random.default_rng(1)
sample = rng.dirichlet(np.ones(5), size=5000)
ic = index_of_coincidence(sample)
h = tsallis_entropy(sample, 0.8)
pmax = sample.max(axis=-1)
print("\n5000 random 5-outcome distributions:")
print("  worst floor slack   :", float(np.min(h - entropy_floor(ic, 0.8))))
print("  worst ceiling slack :", float(np.min(max_prob_ceiling(ic, 5) - pmax)))
print("  worst floor-of-max  :", float(np.min(pmax - max_prob_floor(ic))))
