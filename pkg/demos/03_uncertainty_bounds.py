"""Uncertainty bounds on qubit examples.

Reproduces the numbers behind the two benchmark pictures: the weighted-
average Tsallis entropy of the five-outcome measurement against its lower
bound, and the rescaled entropies of the conical example.  Deviations are
largest for pure states and vanish at maximal mixing.
"""

import numpy as np

from geam import (avg_tsallis_bound, bloch_to_density, conical_qubit_geam,
                  conical_renyi_bound, conical_tsallis_bound, evaluate_report,
                  alpha_log, two_povm_qubit_geam)

ALPHA = 0.8

# --- averaged entropy of the two-POVM example -------------------------------

m = two_povm_qubit_geam()
print("averaged Tsallis entropy vs bound (order 0.8), Bloch vector on z")
print("  r^2    lhs       rhs       rel.dev")
for r2 in np.linspace(0.0, 1.0, 6):
    rho = bloch_to_density((0.0, 0.0, np.sqrt(r2)))
    lhs, rhs = avg_tsallis_bound(m, rho, ALPHA)
    print(f"  {r2:.2f}  {lhs:.6f}  {rhs:.6f}  {100 * (lhs - rhs) / lhs:6.2f}%")

for axis, direction in [("z", (0, 0, 1)), ("x", (1, 0, 0))]:
    lhs, rhs = avg_tsallis_bound(m, bloch_to_density(direction), ALPHA)
    print(f"pure {axis} state deviation: {100 * (lhs - rhs) / lhs:.1f}%")

# --- the conical example, entropies rescaled to [0, 1] -----------------------

c = conical_qubit_geam()
h_max = alpha_log(5.0, ALPHA)
r_max = np.log(5.0)
print("\nconical example, rescaled full-measurement entropies on z")
print("  r^2    H/H_max   bound     R/R_max   bound")
for r2 in np.linspace(0.0, 1.0, 6):
    rho = bloch_to_density((0.0, 0.0, np.sqrt(r2)))
    ht, bt = conical_tsallis_bound(c, rho, ALPHA)
    hr, br = conical_renyi_bound(c, rho, ALPHA)
    print(f"  {r2:.2f}  {ht / h_max:.6f}  {bt / h_max:.6f}  "
          f"{hr / r_max:.6f}  {br / r_max:.6f}")

rho = bloch_to_density((0, 0, 1))
ht, bt = conical_tsallis_bound(c, rho, ALPHA)
hr, br = conical_renyi_bound(c, rho, ALPHA)
print(f"pure z deviations: {100 * (ht - bt) / ht:.1f}% (Tsallis), "
      f"{100 * (hr - br) / hr:.1f}% (Renyi)")

# --- a full report for one state ---------------------------------------------

print("\nbound report, conical example, Bloch (0.3, 0.2, 0.5), orders 0.8 and 2")
report = evaluate_report(c, bloch_to_density((0.3, 0.2, 0.5)), [0.8, 2.0])
for e in report.entries:
    if e.applicable:
        extra = f" lower={e.lower:.4f}" if e.lower is not None else ""
        print(f"  {e.name:<18} order={e.alpha}  lhs={e.lhs:.4f} "
              f"rhs={e.rhs:.4f} slack={e.slack:.2e}{extra}")
    else:
        print(f"  {e.name:<18} order={e.alpha}  skipped: {e.reason}")
