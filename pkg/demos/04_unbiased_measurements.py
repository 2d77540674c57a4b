"""Mutually unbiased bases and their noisy relatives.

Prime-dimension bases come from the quadratic-phase construction; unbiased
measurements of lower efficiency arise by mixing each projector with white
noise.  For d+1 of them the averaged-coincidence bound is an equality, which
makes their probability bounds particularly clean.
"""

import numpy as np

from geam import (averaging_weights, avg_ic_bound, avg_max_prob_bound,
                  avg_pair_prob_bound, from_symmetric, index_of_coincidence,
                  mub_bases, mub_vectors, mums_from_mubs, purity,
                  random_density, conical_design_params, mum_average_ic)
from geam.catalog import mum_efficiency

# --- bases in dimension 3 ----------------------------------------------------

bases = mub_vectors(3)
print("d = 3:", len(bases), "mutually unbiased bases")
v, w = bases[0][0], bases[1][0]
print("  cross-basis overlap |<v|w>|^2 =", abs(np.vdot(v, w)) ** 2)

s3 = mub_bases(3)
print("  overlap constants: x =", s3.params.self_overlaps[0],
      " z =", s3.params.cross_overlaps[0, 1])

# --- depolarized projectors keep the unbiased structure ----------------------

for t in (1.0, 0.8, 0.5):
    s = mums_from_mubs(3, t)
    print(f"visibility {t}: efficiency = {s.params.self_overlaps[0]:.6f} "
          f"(formula {mum_efficiency(3, t):.6f})")

# --- the averaged coincidence bound is exact here ----------------------------

d, t = 3, 0.7
s = mums_from_mubs(d, t)
wts = averaging_weights(s.params)
rho = random_density(d, 2, seed=5)
ics = [index_of_coincidence(p) for p in s.probabilities(rho)]
avg = float(np.dot(wts.values, ics))
print(f"\nd = {d}, visibility {t}: average coincidence {avg:.12f}")
print("  bound value        ", avg_ic_bound(s.params, purity(rho), d))
print("  closed-form value  ",
      mum_average_ic(d, mum_efficiency(d, t), purity(rho)))

# --- probability bounds ------------------------------------------------------

print("\nmax-probability and pair bounds for d+1 unbiased measurements")
for dd, tt in [(2, 1.0), (3, 1.0), (3, 0.7)]:
    ss = mums_from_mubs(dd, tt)
    rho = random_density(dd, 1, seed=9)
    lhs, rhs = avg_max_prob_bound(ss, rho)
    lhs2, rhs2 = avg_pair_prob_bound(ss, rho)
    print(f"  d={dd} t={tt}: max {lhs:.4f} <= {rhs:.4f};  "
          f"pair {lhs2:.4f} <= {rhs2:.4f}")

# --- weighting the measurements turns them into one equiangular object -------

geam = from_symmetric(np.full(4, 0.25), mub_bases(3))
cp = conical_design_params(geam)
print("\nuniformly weighted d=3 bases form a conical 2-design:")
print("  kappa_plus =", cp.kappa_plus, " kappa_minus =", cp.kappa_minus)
