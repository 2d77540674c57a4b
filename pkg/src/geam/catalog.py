"""Built-in reference measurements with their closed-form constants.

Matrices are assembled from closed-form expressions (sqrt(3), sqrt(5), ...)
evaluated in double precision, never from rounded decimal literals, so the
measured constants sit at machine epsilon from the exact ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bounds import averaging_weights
from .errors import DomainError, GeamError, NotPrime, UnknownId
from .measurements import (EquiangularMeasurement, Povm,
                           SymmetricMeasurementSet, characterize_equiangular,
                           characterize_symmetric, conical_design_params,
                           from_symmetric, to_povms)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, int(n**0.5) + 1))


def mub_vectors(d: int) -> list[list[np.ndarray]]:
    """d+1 mutually unbiased orthonormal bases for prime d.

    d = 2 uses the three Pauli eigenbases.  Odd primes use the standard
    quadratic-phase family: the computational basis plus the d bases with
    components omega^(a j^2 + b j)/sqrt(d), omega = exp(2 pi i / d).
    """
    if not _is_prime(d) or d > 31:
        raise NotPrime(f"dimension {d} must be a prime <= 31")
    if d == 2:
        s = 1.0 / np.sqrt(2.0)
        return [
            [np.array([s, s], dtype=complex), np.array([s, -s], dtype=complex)],
            [np.array([s, 1j * s]), np.array([s, -1j * s])],
            [np.array([1.0, 0.0], dtype=complex), np.array([0.0, 1.0], dtype=complex)],
        ]
    omega = np.exp(2j * np.pi / d)
    j = np.arange(d)
    bases = [[np.eye(d, dtype=complex)[:, b] for b in range(d)]]
    for a in range(d):
        bases.append([omega ** ((a * j * j + b * j) % d) / np.sqrt(d)
                      for b in range(d)])
    return bases


def mub_bases(d: int) -> SymmetricMeasurementSet:
    """The d+1 unbiased bases as a symmetric set of projective POVMs."""
    povms = [Povm(tuple(np.outer(v, v.conj()) for v in basis))
             for basis in mub_vectors(d)]
    return characterize_symmetric(povms)


def mums_from_mubs(d: int, visibility: float) -> SymmetricMeasurementSet:
    """d+1 mutually unbiased measurements by depolarizing MUB projectors.

    Each element is t P + (1-t) I/d with t = visibility, which keeps the
    cross overlaps at 1/d and gives efficiency t^2 + (1-t^2)/d.  t = 1
    recovers the bases; t = 0 collapses everything to I/d and the set
    degenerates.
    """
    if not 0.0 <= visibility <= 1.0:
        raise DomainError(f"visibility {visibility} outside [0, 1]")
    eye = np.eye(d, dtype=complex)
    povms = [Povm(tuple(visibility * np.outer(v, v.conj())
                        + (1.0 - visibility) * eye / d for v in basis))
             for basis in mub_vectors(d)]
    return characterize_symmetric(povms)


def mum_efficiency(d: int, visibility: float) -> float:
    """Self-overlap of a depolarized projector, t^2 + (1 - t^2)/d."""
    return visibility**2 + (1.0 - visibility**2) / d


def pauli_mub_design() -> EquiangularMeasurement:
    """Qubit measurement with the six elements |b><b|/3 over the three
    Pauli eigenbases; a conical 2-design."""
    return from_symmetric(np.full(3, 1.0 / 3.0), mub_bases(2))


def two_povm_qubit_geam() -> EquiangularMeasurement:
    """Five-outcome qubit measurement pairing the computational basis
    (weight 2/5) with a three-element trine-like POVM (weight 3/5).

    Not a conical design: the two groups have different design constants.
    """
    r3 = np.sqrt(3.0)
    e11 = np.diag([1.0, 0.0]).astype(complex)
    e12 = np.diag([0.0, 1.0]).astype(complex)
    e21 = np.array([[1.0, -1.0j], [1.0j, 1.0]]) / 3.0
    e22 = np.array([[2.0, r3 + 1.0j], [r3 - 1.0j, 2.0]]) / 6.0
    e23 = np.array([[2.0, -r3 + 1.0j], [-r3 - 1.0j, 2.0]]) / 6.0
    groups = [[0.4 * e11, 0.4 * e12], [0.6 * e21, 0.6 * e22, 0.6 * e23]]
    return characterize_equiangular(groups)


def conical_qubit_geam() -> EquiangularMeasurement:
    """Five-outcome qubit conical 2-design with groups of two and three
    elements and irrational weights built from sqrt(3) and sqrt(5)."""
    r2, r3, r5 = np.sqrt(2.0), np.sqrt(3.0), np.sqrt(5.0)
    pre = (3.0 - r5) / 8.0
    q = -(2.0 + r3 + 1.0j) * np.sqrt(2.0 - r3)
    q11 = pre * np.diag([r5 - r3, r5 + r3]).astype(complex)
    q12 = pre * np.diag([r5 + r3, r5 - r3]).astype(complex)
    q21 = pre * np.array([[2.0, q], [np.conj(q), 2.0]])
    q22 = pre * np.array([[2.0, -1.0j * np.conj(q)], [1.0j * q, 2.0]])
    q23 = (3.0 - r5) / (4.0 * r2) * np.array([[r2, 1.0 - 1.0j],
                                              [1.0 + 1.0j, r2]])
    return characterize_equiangular([[q11, q12], [q21, q22, q23]])


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    measurement: EquiangularMeasurement | SymmetricMeasurementSet
    expected: dict[str, float]


def measured_constants(m) -> dict[str, float]:
    """Named constants measured from an object, for expected-value checks.

    Keys follow the pattern weight_i/trace_i/self_ratio_i/... for
    equiangular measurements and w_i/x_i/y_i/z_i_j for symmetric sets,
    plus omega_i and the weight normalizer where defined.
    """
    out: dict[str, float] = {}
    if isinstance(m, EquiangularMeasurement):
        p = m.params
        for mu in range(p.n_groups):
            out[f"weight_{mu + 1}"] = float(p.weights[mu])
            out[f"trace_{mu + 1}"] = float(p.traces[mu])
            out[f"self_ratio_{mu + 1}"] = float(p.self_ratios[mu])
            out[f"trace_sq_{mu + 1}"] = float(p.traces[mu]**2 * p.self_ratios[mu])
            if not np.isnan(p.intra_ratios[mu]):
                out[f"intra_ratio_{mu + 1}"] = float(p.intra_ratios[mu])
                out[f"intra_overlap_{mu + 1}"] = float(
                    p.traces[mu]**2 * p.intra_ratios[mu])
        out["cross_ratio"] = float(p.cross_ratio)
        for mu in range(p.n_groups):
            for nu in range(mu + 1, p.n_groups):
                out[f"cross_overlap_{mu + 1}_{nu + 1}"] = float(
                    p.cross_ratio * p.traces[mu] * p.traces[nu])
        sym = to_povms(m).params
        for mu in range(sym.n_groups):
            out[f"w_{mu + 1}"] = float(sym.traces[mu])
            out[f"x_{mu + 1}"] = float(sym.self_overlaps[mu])
            if not np.isnan(sym.intra_overlaps[mu]):
                out[f"y_{mu + 1}"] = float(sym.intra_overlaps[mu])
        for mu in range(sym.n_groups):
            for nu in range(mu + 1, sym.n_groups):
                out[f"z_{mu + 1}_{nu + 1}"] = float(sym.cross_overlaps[mu, nu])
        try:
            wts = averaging_weights(sym)
            for mu, val in enumerate(wts.values):
                out[f"omega_{mu + 1}"] = float(val)
            out["weight_normalizer"] = wts.normalizer
        except GeamError:
            pass
        try:
            cp = conical_design_params(m)
            out["kappa_plus"] = cp.kappa_plus
            out["kappa_minus"] = cp.kappa_minus
            out["trace_avg"] = cp.trace_avg
        except GeamError:
            pass
    else:
        p = m.params
        for mu in range(p.n_groups):
            out[f"w_{mu + 1}"] = float(p.traces[mu])
            out[f"x_{mu + 1}"] = float(p.self_overlaps[mu])
            if not np.isnan(p.intra_overlaps[mu]):
                out[f"y_{mu + 1}"] = float(p.intra_overlaps[mu])
        for mu in range(p.n_groups):
            for nu in range(mu + 1, p.n_groups):
                out[f"z_{mu + 1}_{nu + 1}"] = float(p.cross_overlaps[mu, nu])
        try:
            wts = averaging_weights(p)
            for mu, val in enumerate(wts.values):
                out[f"omega_{mu + 1}"] = float(val)
            out["weight_normalizer"] = wts.normalizer
        except GeamError:
            pass
    return out


@lru_cache(maxsize=1)
def entries() -> dict[str, CatalogEntry]:
    r5 = np.sqrt(5.0)
    catalog = [
        CatalogEntry(
            id="pauli_mub",
            description="six Pauli-eigenbasis projectors scaled by 1/3 "
                        "(qubit, conical design)",
            measurement=pauli_mub_design(),
            expected={
                "weight_1": 1 / 3, "weight_2": 1 / 3, "weight_3": 1 / 3,
                "trace_1": 1 / 3, "self_ratio_1": 1.0, "intra_ratio_1": 0.0,
                "cross_ratio": 0.5,
                "w_1": 1.0, "x_1": 1.0, "y_1": 0.0, "z_1_2": 0.5,
                "omega_1": 1 / 3, "omega_2": 1 / 3, "omega_3": 1 / 3,
                "weight_normalizer": 3.0,
                "kappa_minus": 1 / 9, "trace_avg": 1 / 3,
                "kappa_plus": (1 / 3 - 1 / 9) / 2,
            }),
        CatalogEntry(
            id="two_povm",
            description="computational basis (weight 2/5) joined with a "
                        "three-outcome POVM (weight 3/5); qubit, no "
                        "conical design",
            measurement=two_povm_qubit_geam(),
            expected={
                "w_1": 1.0, "w_2": 2 / 3,
                "x_1": 1.0, "x_2": 4 / 9,
                "y_1": 0.0, "y_2": 1 / 9,
                "z_1_2": 1 / 3,
                "omega_1": 0.25, "omega_2": 0.75,
                "weight_normalizer": 4.0,
                "trace_1": 0.4, "trace_2": 0.4,
                "trace_sq_1": 0.16, "trace_sq_2": 0.16,
                "self_ratio_1": 1.0, "self_ratio_2": 1.0,
                "intra_ratio_1": 0.0, "intra_ratio_2": 0.25,
                "cross_ratio": 0.5,
            }),
        CatalogEntry(
            id="conical",
            description="five-outcome qubit conical 2-design with "
                        "irrational group weights",
            measurement=conical_qubit_geam(),
            expected={
                "weight_1": (3 * r5 - 5) / 4,
                "weight_2": 1 - (3 * r5 - 5) / 4,
                "trace_1": (3 * r5 - 5) / 4,
                "trace_2": (3 - r5) / 2,
                "trace_sq_1": (7 - 3 * r5) / 2,
                "trace_sq_2": (7 - 3 * r5) / 2,
                "intra_overlap_1": (7 - 3 * r5) / 8,
                "intra_overlap_2": (7 - 3 * r5) / 8,
                "cross_overlap_1_2": (7 * r5 - 15) / 8,
                "self_ratio_1": 0.8, "self_ratio_2": 1.0,
                "intra_ratio_1": 0.2, "intra_ratio_2": 0.25,
                "cross_ratio": 0.5,
                "kappa_minus": (21 - 9 * r5) / 8,
                "trace_avg": 11 * (3 - r5) ** 2 / 16,
            }),
        CatalogEntry(
            id="mub_d3",
            description="four mutually unbiased bases in dimension 3",
            measurement=mub_bases(3),
            expected={
                "w_1": 1.0, "x_1": 1.0, "y_1": 0.0,
                "z_1_2": 1 / 3, "z_3_4": 1 / 3,
                "omega_1": 0.25, "weight_normalizer": 4.0,
            }),
        CatalogEntry(
            id="mum_d2_t06",
            description="three qubit unbiased measurements, visibility 0.6 "
                        "(efficiency 0.68)",
            measurement=mums_from_mubs(2, 0.6),
            expected={
                "w_1": 1.0,
                "x_1": 0.68, "x_2": 0.68, "x_3": 0.68,
                "y_1": 0.32, "z_1_2": 0.5, "z_2_3": 0.5,
            }),
        CatalogEntry(
            id="mum_d3_t06",
            description="four unbiased measurements in dimension 3, "
                        "visibility 0.6",
            measurement=mums_from_mubs(3, 0.6),
            expected={
                "w_1": 1.0,
                "x_1": mum_efficiency(3, 0.6),
                "y_1": (1.0 - mum_efficiency(3, 0.6)) / 2,
                "z_1_2": 1 / 3,
            }),
    ]
    return {c.id: c for c in catalog}


def get(entry_id: str) -> CatalogEntry:
    try:
        return entries()[entry_id]
    except KeyError:
        raise UnknownId(f"no catalog entry {entry_id!r}; known ids: "
                        + ", ".join(sorted(entries()))) from None
