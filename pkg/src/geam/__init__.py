"""Quantum measurements from generalized equiangular tight frames.

Construction and validation of symmetric POVM collections and equiangular
measurement groups, their entropic statistics, and the uncertainty bounds
that the frame structure imposes on them.
"""

from .bounds import (AveragingWeights, BoundEntry, BoundReport,
                     averaging_weights, avg_ic_bound, avg_max_prob_bound,
                     avg_pair_prob_bound, avg_renyi_bound, avg_tsallis_bound,
                     conical_ic, conical_max_prob_bounds,
                     conical_pair_prob_bound, conical_renyi_bound,
                     conical_tsallis_bound, evaluate_report, mum_average_ic)
from .catalog import (CatalogEntry, conical_qubit_geam, mub_bases,
                      mub_vectors, mum_efficiency, mums_from_mubs,
                      pauli_mub_design, two_povm_qubit_geam)
from .diagrams import (entropy_floor, max_prob_ceiling, max_prob_floor,
                       pair_prob_ceiling, segment_coefficients)
from .entropies import (alpha_log, clean_probabilities, index_of_coincidence,
                        min_entropy, renyi_entropy, shannon_entropy,
                        tsallis_entropy, tsallis_to_renyi)
from .errors import (AlphaOutOfRange, BadWeights, DegenerateFrame,
                     DimensionMismatch, DomainError, GeamError,
                     InconsistentCrossOverlap, InvalidBloch, InvalidRank,
                     NonQubit, NotConicalDesign, NotEquiangular,
                     NotNormalized, NotPrime, NotSymmetric, ParseError,
                     UnequalOutcomeCounts, UnknownId)
from .linalg import (HERM_TOL, PSD_TOL, STRUCT_TOL, bloch_to_density,
                     density_to_bloch, hs_inner, is_hermitian, is_psd,
                     purity, random_density, swap_and_projectors,
                     swap_operator, validate_density)
from .measurements import (ConicalDesignParams, EquiangularMeasurement,
                           EquiangularParams, Povm, SymmetricMeasurementSet,
                           SymmetricParams, ValidationReport,
                           characterize_equiangular, characterize_symmetric,
                           conical_design_params, conical_tensor_residual,
                           dual_operators, from_symmetric,
                           is_informationally_complete, is_projective_2design,
                           outcome_count_matches, to_povms, validate_povm)

__version__ = "0.1.0"
