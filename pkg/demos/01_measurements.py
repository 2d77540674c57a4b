"""Building and validating structured measurements.

Walks through the two views of the data model: a collection of POVMs with
shared overlap constants, and the equiangular measurement obtained by
scaling those POVMs with positive weights summing to one.
"""

import numpy as np

from geam import (characterize_equiangular, characterize_symmetric,
                  conical_design_params, conical_tensor_residual,
                  from_symmetric, is_informationally_complete, to_povms,
                  two_povm_qubit_geam, validate_povm)

# --- a POVM is any PSD collection summing to the identity ------------------

basis = [np.diag([1.0, 0.0]).astype(complex), np.diag([0.0, 1.0]).astype(complex)]
report = validate_povm(basis)
print("computational basis valid:", report.valid)
print("  completeness residual:", report.completeness_residual)

r3 = np.sqrt(3.0)
trine = [np.array([[1.0, -1.0j], [1.0j, 1.0]]) / 3.0,
         np.array([[2.0, r3 + 1.0j], [r3 - 1.0j, 2.0]]) / 6.0,
         np.array([[2.0, -r3 + 1.0j], [-r3 - 1.0j, 2.0]]) / 6.0]
print("trine POVM valid:", validate_povm(trine).valid)

# --- shared constants across the collection --------------------------------

sym = characterize_symmetric([basis, trine])
print("\nsymmetric constants")
print("  traces w        :", sym.params.traces)
print("  self overlaps x :", sym.params.self_overlaps)
print("  intra overlaps y:", sym.params.intra_overlaps)
print("  cross overlap z :", sym.params.cross_overlaps[0, 1])

# --- scaling by weights gives an equiangular measurement --------------------

m = from_symmetric([0.4, 0.6], sym)
print("\nequiangular constants after weighting by (2/5, 3/5)")
print("  element traces a:", m.params.traces)
print("  self ratios b   :", m.params.self_ratios)
print("  intra ratios c  :", m.params.intra_ratios)
print("  cross ratio f   :", m.params.cross_ratio, "(always 1/d)")

complete, rank = is_informationally_complete(m)
print("informationally complete:", complete, "(operator span rank", rank, ")")

# the same object ships as a catalog constructor
assert np.allclose(m.groups[0][0], two_povm_qubit_geam().groups[0][0])

# --- round trip and the conical-design test ---------------------------------

back = to_povms(m)
print("\nround trip recovers POVM traces:", back.params.traces)

try:
    conical_design_params(m)
except Exception as exc:
    print("conical 2-design: no ->", exc)

# characterizing raw operator groups applies the full battery of checks
again = characterize_equiangular([list(g) for g in m.groups])
print("re-characterized cross ratio:", again.params.cross_ratio)

from geam import pauli_mub_design  # noqa: E402

design = pauli_mub_design()
print("\nPauli-basis design is a conical 2-design:")
cp = conical_design_params(design)
print("  kappa_plus =", cp.kappa_plus, " kappa_minus =", cp.kappa_minus)
print("  tensor identity residual:", conical_tensor_residual(design))
