"""Generalized symmetric POVM sets and equiangular measurement groups.

Two views of the same object family live here.  A *symmetric set* is a
collection of M POVMs whose elements share a trace w, a self-overlap x, an
intra-group overlap y and cross-group overlaps z.  An *equiangular
measurement* is M groups of PSD operators, the mu-th summing to gamma_mu
times the identity, with trace ratios (trace a, self ratio b, intra ratio c,
cross ratio f) uniform in the appropriate indices.  Scaling the POVM
elements by the group weights gamma maps one view onto the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (BadWeights, DegenerateFrame, DimensionMismatch,
                     DomainError, InconsistentCrossOverlap, NotConicalDesign,
                     NotEquiangular, NotNormalized, NotSymmetric)
from .linalg import (HERM_TOL, PSD_TOL, STRUCT_TOL, hs_inner, min_eigenvalue,
                     require_hermitian, swap_and_projectors)

RANK_CUTOFF = 1e-8  # relative singular-value cutoff for operator-span rank


def _freeze(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=complex)
    out.setflags(write=False)
    return out


def _probabilities(elements, rho) -> np.ndarray:
    stack = np.stack(elements)
    return np.einsum("kij,ji->k", stack, np.asarray(rho, dtype=complex)).real


def _pair(a: np.ndarray, b: np.ndarray) -> float:
    """tr(ab).real without the Hermiticity guard of hs_inner; diagnostics
    report Hermiticity separately and must not crash on bad input."""
    return float(np.einsum("ij,ji->", a, b).real)


def _uniform(values, tol: float = STRUCT_TOL):
    """Mean of `values` plus the worst deviation and its position."""
    arr = np.asarray(values, dtype=float)
    mean = float(arr.mean())
    devs = np.abs(arr - mean)
    pos = int(np.argmax(devs))
    resid = float(devs[pos])
    return mean, resid, pos, resid <= tol * max(1.0, abs(mean))


# ---------------------------------------------------------------------------
# data model

@dataclass(frozen=True)
class Povm:
    """Ordered PSD elements summing to the identity."""

    elements: tuple[np.ndarray, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements",
                           tuple(_freeze(e) for e in self.elements))

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def __len__(self) -> int:
        return len(self.elements)

    def probabilities(self, rho) -> np.ndarray:
        return _probabilities(self.elements, rho)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    dim: int
    n_elements: int
    hermiticity_residual: float
    psd_margin: float              # smallest eigenvalue over all elements
    completeness_residual: float   # max-norm of sum(E) - I

    def residuals(self) -> dict[str, float]:
        return {"hermitian": self.hermiticity_residual,
                "psd_margin": self.psd_margin,
                "completeness": self.completeness_residual}


@dataclass(frozen=True)
class SymmetricParams:
    """Shared trace/overlap constants of a symmetric POVM collection.

    intra_overlaps are nan for singleton groups, which have no element
    pairs; the cross_overlaps diagonal is nan by convention.
    """

    counts: tuple[int, ...]
    traces: np.ndarray          # w_mu
    self_overlaps: np.ndarray   # x_mu = tr(E^2)
    intra_overlaps: np.ndarray  # y_mu = tr(E_i E_j), i != j
    cross_overlaps: np.ndarray  # z_mu_nu, M x M

    @property
    def n_groups(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class SymmetricMeasurementSet:
    povms: tuple[Povm, ...]
    params: SymmetricParams

    @property
    def dim(self) -> int:
        return self.povms[0].dim

    @property
    def n_groups(self) -> int:
        return len(self.povms)

    def probabilities(self, rho) -> list[np.ndarray]:
        return [p.probabilities(rho) for p in self.povms]


@dataclass(frozen=True)
class EquiangularParams:
    """Trace-ratio constants of an equiangular measurement."""

    counts: tuple[int, ...]
    weights: np.ndarray       # gamma_mu, summing to 1
    traces: np.ndarray        # a_mu = tr(Q)
    self_ratios: np.ndarray   # b_mu = tr(Q^2)/tr(Q)^2
    intra_ratios: np.ndarray  # c_mu = tr(Q_i Q_j)/tr(Q)^2, nan for N_mu = 1
    cross_ratio: float        # f = tr(Q Q')/(tr(Q) tr(Q')), always 1/dim

    @property
    def n_groups(self) -> int:
        return len(self.counts)

    @property
    def n_outcomes(self) -> int:
        return int(sum(self.counts))


@dataclass(frozen=True)
class EquiangularMeasurement:
    dim: int
    groups: tuple[tuple[np.ndarray, ...], ...]
    params: EquiangularParams

    def __post_init__(self):
        object.__setattr__(
            self, "groups",
            tuple(tuple(_freeze(q) for q in g) for g in self.groups))

    @property
    def n_groups(self) -> int:
        return len(self.groups)

    @property
    def n_outcomes(self) -> int:
        return sum(len(g) for g in self.groups)

    def all_elements(self) -> list[np.ndarray]:
        return [q for g in self.groups for q in g]

    def group_probabilities(self, rho) -> list[np.ndarray]:
        return [_probabilities(g, rho) for g in self.groups]

    def all_probabilities(self, rho) -> np.ndarray:
        return _probabilities(self.all_elements(), rho)

    def povm_probabilities(self, rho) -> list[np.ndarray]:
        """Outcome probabilities of the POVMs obtained by undoing gamma."""
        return [_probabilities(g, rho) / w
                for g, w in zip(self.groups, self.params.weights)]


@dataclass(frozen=True)
class ConicalDesignParams:
    """Constants of sum Q (x) Q = kappa_plus I (x) I + kappa_minus W."""

    kappa_plus: float
    kappa_minus: float   # the shared per-group constant a^2 (b - c)
    trace_avg: float     # gamma-weighted average element trace

    def __post_init__(self):
        # equality kappa_plus = kappa_minus (projective designs) is allowed,
        # so the comparison gets round-off slack
        slack = STRUCT_TOL * max(1.0, abs(self.kappa_minus))
        if self.kappa_plus < self.kappa_minus - slack or self.kappa_minus <= 0.0:
            raise NotConicalDesign(
                residual=float(self.kappa_minus - self.kappa_plus),
                message=f"need kappa_plus >= kappa_minus > 0, got "
                        f"{self.kappa_plus:.6g} and {self.kappa_minus:.6g}")


@dataclass(frozen=True)
class FrameDiagnostics:
    """Per-condition residuals collected while characterizing a measurement."""

    kind: str
    dim: int
    residuals: dict[str, float]
    failures: tuple[str, ...]
    params: object | None = None
    where: dict[str, tuple] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.failures


# ---------------------------------------------------------------------------
# validators and constructors

def validate_povm(povm) -> ValidationReport:
    """Residual report for the POVM conditions (PSD elements, sum = I).

    Takes a Povm or any iterable of matrices.
    """
    elements = povm.elements if isinstance(povm, Povm) else povm
    ops = [np.asarray(e, dtype=complex) for e in elements]
    if not ops:
        raise DomainError("POVM needs at least one element")
    d = ops[0].shape[0]
    if any(o.shape != (d, d) for o in ops):
        raise DimensionMismatch("POVM elements have mixed shapes")
    herm = max(float(np.max(np.abs(o - o.conj().T))) for o in ops)
    margin = min(min_eigenvalue((o + o.conj().T) / 2.0) for o in ops)
    resid = float(np.max(np.abs(sum(ops) - np.eye(d))))
    valid = herm <= HERM_TOL and margin >= -PSD_TOL and resid <= STRUCT_TOL
    return ValidationReport(valid=valid, dim=d, n_elements=len(ops),
                            hermiticity_residual=herm, psd_margin=margin,
                            completeness_residual=resid)


def symmetric_diagnostics(povms) -> FrameDiagnostics:
    """Measure the symmetry conditions of a POVM collection."""
    sets = [p if isinstance(p, Povm) else Povm(tuple(p)) for p in povms]
    if not sets:
        raise DomainError("need at least one POVM")
    d = sets[0].dim
    if any(p.dim != d for p in sets):
        raise DimensionMismatch("POVMs act on different dimensions")
    m = len(sets)
    counts = tuple(len(p) for p in sets)

    residuals: dict[str, float] = {}
    failures: list[str] = []
    where: dict[str, tuple] = {}

    reports = [validate_povm(p.elements) for p in sets]
    residuals["hermitian"] = max(r.hermiticity_residual for r in reports)
    residuals["psd_margin"] = min(r.psd_margin for r in reports)
    residuals["completeness"] = max(r.completeness_residual for r in reports)
    if residuals["hermitian"] > HERM_TOL:
        failures.append("hermitian")
    if residuals["psd_margin"] < -PSD_TOL:
        failures.append("psd_margin")
    if residuals["completeness"] > STRUCT_TOL:
        failures.append("completeness")

    traces = np.empty(m)
    self_ov = np.empty(m)
    intra = np.full(m, np.nan)
    worst = {"trace_uniform": 0.0, "self_overlap_uniform": 0.0,
             "intra_overlap_uniform": 0.0}
    for mu, p in enumerate(sets):
        t_mean, t_res, t_pos, _ = _uniform([np.trace(e).real
                                            for e in p.elements])
        traces[mu] = t_mean
        if t_res > worst["trace_uniform"]:
            worst["trace_uniform"] = t_res
            where["trace_uniform"] = (mu, t_pos, None)
        s_mean, s_res, s_pos, _ = _uniform([_pair(e, e) for e in p.elements])
        self_ov[mu] = s_mean
        if s_res > worst["self_overlap_uniform"]:
            worst["self_overlap_uniform"] = s_res
            where["self_overlap_uniform"] = (mu, s_pos, None)
        if len(p) > 1:
            pairs = [(i, j) for i in range(len(p)) for j in range(i + 1, len(p))]
            vals = [_pair(p.elements[i], p.elements[j]) for i, j in pairs]
            y_mean, y_res, y_pos, _ = _uniform(vals)
            intra[mu] = y_mean
            if y_res > worst["intra_overlap_uniform"]:
                worst["intra_overlap_uniform"] = y_res
                where["intra_overlap_uniform"] = (mu, *pairs[y_pos])
    for name, res in worst.items():
        residuals[name] = res
        scale = {"trace_uniform": max(1.0, float(np.max(np.abs(traces)))),
                 "self_overlap_uniform": 1.0,
                 "intra_overlap_uniform": 1.0}[name]
        if res > STRUCT_TOL * scale:
            failures.append(name)

    cross = np.full((m, m), np.nan)
    cross_res = 0.0
    for mu in range(m):
        for nu in range(mu + 1, m):
            pairs = [(i, j) for i in range(counts[mu]) for j in range(counts[nu])]
            vals = [_pair(sets[mu].elements[i], sets[nu].elements[j])
                    for i, j in pairs]
            z_mean, z_res, z_pos, _ = _uniform(vals)
            cross[mu, nu] = cross[nu, mu] = z_mean
            if z_res > cross_res:
                cross_res = z_res
                where["cross_overlap_uniform"] = (mu, nu, *pairs[z_pos])
    residuals["cross_overlap_uniform"] = cross_res
    if cross_res > STRUCT_TOL:
        failures.append("cross_overlap_uniform")

    margin = float(np.min(self_ov - np.nan_to_num(intra, nan=-np.inf)))
    residuals["nondegenerate"] = margin
    if margin <= STRUCT_TOL:
        failures.append("nondegenerate")

    params = SymmetricParams(counts=counts, traces=traces,
                             self_overlaps=self_ov, intra_overlaps=intra,
                             cross_overlaps=cross)
    return FrameDiagnostics(kind="symmetric", dim=d, residuals=residuals,
                            failures=tuple(failures), params=params,
                            where=where)


def characterize_symmetric(povms) -> SymmetricMeasurementSet:
    """Extract (w, x, y, z) from POVMs, insisting on the symmetry conditions."""
    diag = symmetric_diagnostics(povms)
    order = ["hermitian", "psd_margin", "completeness", "trace_uniform",
             "self_overlap_uniform", "intra_overlap_uniform",
             "cross_overlap_uniform"]
    for cond in order:
        if cond in diag.failures:
            loc = diag.where.get(cond, ())
            mu = loc[0] if loc else None
            i = loc[-2] if len(loc) >= 3 else None
            j = loc[-1] if len(loc) >= 3 else None
            raise NotSymmetric(cond, diag.residuals[cond], mu=mu, i=i, j=j)
    if "nondegenerate" in diag.failures:
        raise DegenerateFrame("self-overlap does not exceed intra-group "
                              f"overlap (margin {diag.residuals['nondegenerate']:.3e})")
    sets = tuple(p if isinstance(p, Povm) else Povm(tuple(p)) for p in povms)
    return SymmetricMeasurementSet(povms=sets, params=diag.params)


def equiangular_diagnostics(groups) -> FrameDiagnostics:
    """Measure the equiangular-measurement conditions on raw operator groups."""
    gs = tuple(tuple(require_hermitian(q, tol=1.0) for q in g) for g in groups)
    if not gs or any(len(g) == 0 for g in gs):
        raise DomainError("need nonempty operator groups")
    d = gs[0][0].shape[0]
    if any(q.shape != (d, d) for g in gs for q in g):
        raise DimensionMismatch("operators have mixed shapes")
    m = len(gs)
    counts = tuple(len(g) for g in gs)

    residuals: dict[str, float] = {}
    failures: list[str] = []
    where: dict[str, tuple] = {}

    residuals["hermitian"] = max(float(np.max(np.abs(q - q.conj().T)))
                                 for g in gs for q in g)
    if residuals["hermitian"] > HERM_TOL:
        failures.append("hermitian")
    residuals["psd_margin"] = min(min_eigenvalue((q + q.conj().T) / 2.0)
                                  for g in gs for q in g)
    if residuals["psd_margin"] < -PSD_TOL:
        failures.append("psd_margin")

    weights = np.empty(m)
    group_sum_res = 0.0
    for mu, g in enumerate(gs):
        total = sum(g)
        w = float(np.trace(total).real) / d
        weights[mu] = w
        res = float(np.max(np.abs(total - w * np.eye(d))))
        if res > group_sum_res:
            group_sum_res = res
            where["group_sum"] = (mu, None, None)
    residuals["group_sum"] = group_sum_res
    if group_sum_res > STRUCT_TOL * max(1.0, float(np.max(np.abs(weights)))):
        failures.append("group_sum")
    residuals["weight_sum"] = abs(float(weights.sum()) - 1.0)
    if residuals["weight_sum"] > STRUCT_TOL:
        failures.append("weight_sum")
    if np.any(weights <= 0.0):
        failures.append("weight_positive")
        residuals["weight_positive"] = float(weights.min())

    traces = np.empty(m)
    self_r = np.empty(m)
    intra_r = np.full(m, np.nan)
    worst = {"trace_uniform": 0.0, "self_overlap_uniform": 0.0,
             "intra_overlap_uniform": 0.0}
    for mu, g in enumerate(gs):
        t_mean, t_res, t_pos, _ = _uniform([np.trace(q).real for q in g])
        traces[mu] = t_mean
        if t_res > worst["trace_uniform"]:
            worst["trace_uniform"] = t_res
            where["trace_uniform"] = (mu, t_pos, None)
        sq = t_mean * t_mean
        s_mean, s_res, s_pos, _ = _uniform([_pair(q, q) / sq for q in g])
        self_r[mu] = s_mean
        if s_res > worst["self_overlap_uniform"]:
            worst["self_overlap_uniform"] = s_res
            where["self_overlap_uniform"] = (mu, s_pos, None)
        if len(g) > 1:
            pairs = [(i, j) for i in range(len(g)) for j in range(i + 1, len(g))]
            vals = [_pair(g[i], g[j]) / sq for i, j in pairs]
            c_mean, c_res, c_pos, _ = _uniform(vals)
            intra_r[mu] = c_mean
            if c_res > worst["intra_overlap_uniform"]:
                worst["intra_overlap_uniform"] = c_res
                where["intra_overlap_uniform"] = (mu, *pairs[c_pos])
    for name, res in worst.items():
        residuals[name] = res
        if res > STRUCT_TOL:
            failures.append(name)

    cross_vals = []
    for mu in range(m):
        for nu in range(mu + 1, m):
            for i in range(counts[mu]):
                for j in range(counts[nu]):
                    cross_vals.append(_pair(gs[mu][i], gs[nu][j])
                                      / (traces[mu] * traces[nu]))
    if cross_vals:
        f_mean, f_res, _, _ = _uniform(cross_vals)
    else:
        f_mean, f_res = 1.0 / d, 0.0  # single group: no cross pairs
    residuals["cross_overlap_uniform"] = f_res
    if f_res > STRUCT_TOL:
        failures.append("cross_overlap_uniform")
    residuals["cross_overlap_value"] = abs(f_mean - 1.0 / d)
    if residuals["cross_overlap_value"] > STRUCT_TOL:
        failures.append("cross_overlap_value")

    # derived identities: a = gamma d / N and c = (N f - b)/(N - 1)
    residuals["trace_identity"] = float(np.max(np.abs(
        traces - weights * d / np.asarray(counts))))
    if residuals["trace_identity"] > STRUCT_TOL * max(1.0, float(np.max(traces))):
        failures.append("trace_identity")
    derived_c = np.array([(counts[mu] * f_mean - self_r[mu]) / (counts[mu] - 1)
                          if counts[mu] > 1 else np.nan for mu in range(m)])
    with np.errstate(invalid="ignore"):
        c_dev = np.abs(np.nan_to_num(intra_r - derived_c, nan=0.0))
    residuals["intra_identity"] = float(np.max(c_dev)) if m else 0.0
    if residuals["intra_identity"] > STRUCT_TOL:
        failures.append("intra_identity")

    margin = float(np.min(self_r - np.nan_to_num(intra_r, nan=-np.inf)))
    residuals["nondegenerate"] = margin
    if margin <= STRUCT_TOL:
        failures.append("nondegenerate")

    params = EquiangularParams(counts=counts, weights=weights, traces=traces,
                               self_ratios=self_r, intra_ratios=intra_r,
                               cross_ratio=f_mean)
    return FrameDiagnostics(kind="equiangular", dim=d, residuals=residuals,
                            failures=tuple(failures), params=params,
                            where=where)


def characterize_equiangular(groups) -> EquiangularMeasurement:
    """Extract the (gamma, a, b, c, f) constants, insisting on all conditions."""
    diag = equiangular_diagnostics(groups)
    for cond in diag.failures:
        if cond == "nondegenerate":
            raise DegenerateFrame("self ratio does not exceed intra ratio "
                                  f"(margin {diag.residuals[cond]:.3e})")
        raise NotEquiangular(cond, diag.residuals[cond],
                             mu=diag.where.get(cond, (None,))[0])
    gs = tuple(tuple(np.asarray(q, dtype=complex) for q in g) for g in groups)
    return EquiangularMeasurement(dim=diag.dim, groups=gs, params=diag.params)


def from_symmetric(gamma, s: SymmetricMeasurementSet) -> EquiangularMeasurement:
    """Scale the POVMs of a symmetric set by positive weights summing to one."""
    g = np.asarray(gamma, dtype=float)
    if g.shape != (s.n_groups,):
        raise BadWeights(f"need {s.n_groups} weights, got {g.shape}")
    if np.any(g <= 0.0):
        raise BadWeights("weights must be positive")
    if abs(float(g.sum()) - 1.0) > STRUCT_TOL:
        raise BadWeights(f"weights sum to {float(g.sum())}, not 1")

    p = s.params
    d = s.dim
    ratios = []
    for mu in range(s.n_groups):
        for nu in range(mu + 1, s.n_groups):
            ratios.append(p.cross_overlaps[mu, nu]
                          / (p.traces[mu] * p.traces[nu]))
    if ratios:
        f_mean, f_res, _, ok = _uniform(ratios)
        if not ok or abs(f_mean - 1.0 / d) > STRUCT_TOL:
            raise InconsistentCrossOverlap(
                f"cross overlap ratio not uniform at 1/d (residual {f_res:.3e})")
    else:
        f_mean = 1.0 / d

    groups = tuple(tuple(g[mu] * e for e in s.povms[mu].elements)
                   for mu in range(s.n_groups))
    params = EquiangularParams(
        counts=p.counts,
        weights=g.copy(),
        traces=g * p.traces,
        self_ratios=p.self_overlaps / p.traces**2,
        intra_ratios=p.intra_overlaps / p.traces**2,
        cross_ratio=f_mean)
    return EquiangularMeasurement(dim=d, groups=groups, params=params)


def to_povms(m: EquiangularMeasurement) -> SymmetricMeasurementSet:
    """Undo the group weights, recovering the symmetric POVM collection."""
    p = m.params
    povms = tuple(Povm(tuple(q / w for q in g))
                  for g, w in zip(m.groups, p.weights))
    w = p.traces / p.weights
    z = np.full((p.n_groups, p.n_groups), np.nan)
    for mu in range(p.n_groups):
        for nu in range(p.n_groups):
            if mu != nu:
                z[mu, nu] = p.cross_ratio * w[mu] * w[nu]
    params = SymmetricParams(counts=p.counts, traces=w,
                             self_overlaps=p.self_ratios * w**2,
                             intra_overlaps=p.intra_ratios * w**2,
                             cross_overlaps=z)
    return SymmetricMeasurementSet(povms=povms, params=params)


def operator_span_rank(elements) -> int:
    """Rank of the element set viewed as vectors in operator space."""
    stack = np.stack([np.asarray(e, dtype=complex).ravel() for e in elements])
    sv = np.linalg.svd(stack, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.sum(sv > RANK_CUTOFF * sv[0]))


def is_informationally_complete(m: EquiangularMeasurement) -> tuple[bool, int]:
    """(span rank == dim^2, span rank) for the measurement elements."""
    rank = operator_span_rank(m.all_elements())
    return rank == m.dim * m.dim, rank


def outcome_count_matches(m: EquiangularMeasurement) -> bool:
    """Necessary count condition sum(N) = d^2 + M - 1 for minimal
    informationally complete measurements."""
    return m.n_outcomes == m.dim * m.dim + m.n_groups - 1


def conical_design_params(m: EquiangularMeasurement,
                          tol: float = STRUCT_TOL) -> ConicalDesignParams:
    """Design constants if a^2 (b - c) is uniform over groups.

    Groups with a single element have no intra ratio and cannot enter the
    uniformity check, so they are rejected here.
    """
    p = m.params
    if np.any(np.isnan(p.intra_ratios)):
        mu = int(np.where(np.isnan(p.intra_ratios))[0][0])
        raise NotConicalDesign(residual=np.inf, mu=mu,
                               message=f"group {mu} has a single element, so "
                                       "its intra ratio is undefined")
    s_vals = p.traces**2 * (p.self_ratios - p.intra_ratios)
    s_mean, s_res, s_pos, ok = _uniform(s_vals, tol)
    if not ok:
        raise NotConicalDesign(residual=s_res, mu=s_pos)
    sigma = float(np.dot(p.traces, p.weights))
    return ConicalDesignParams(kappa_plus=(sigma - s_mean) / m.dim,
                               kappa_minus=s_mean, trace_avg=sigma)


def conical_tensor_residual(m: EquiangularMeasurement) -> float:
    """Max-norm residual of sum Q (x) Q - kappa_plus I (x) I - kappa_minus W."""
    cp = conical_design_params(m)
    d = m.dim
    w, _, _ = swap_and_projectors(d)
    acc = np.zeros((d * d, d * d), dtype=complex)
    for q in m.all_elements():
        acc += np.kron(q, q)
    acc -= cp.kappa_plus * np.eye(d * d) + cp.kappa_minus * w
    return float(np.max(np.abs(acc)))


def is_projective_2design(vectors, tol: float = STRUCT_TOL) -> bool:
    """True iff the averaged double tensor of the projectors equals
    2/(d^2+d) times the symmetric-subspace projector."""
    vecs = [np.asarray(v, dtype=complex).ravel() for v in vectors]
    if not vecs:
        raise DomainError("need at least one vector")
    d = vecs[0].size
    if any(v.size != d for v in vecs):
        raise DimensionMismatch("vectors have mixed dimensions")
    for v in vecs:
        if abs(np.linalg.norm(v) - 1.0) > tol:
            raise NotNormalized(f"vector norm {np.linalg.norm(v):.6f} != 1")
    _, p_sym, _ = swap_and_projectors(d)
    acc = np.zeros((d * d, d * d), dtype=complex)
    for v in vecs:
        proj = np.outer(v, v.conj())
        acc += np.kron(proj, proj)
    acc /= len(vecs)
    resid = float(np.max(np.abs(acc - 2.0 / (d * d + d) * p_sym)))
    return resid <= tol


def dual_operators(m: EquiangularMeasurement) -> tuple[tuple[np.ndarray, ...], ...]:
    """Dual-frame operators reconstructing probabilities from probabilities.

    For each element Q the dual is (Q - (a - s/(M gamma)) I/d) / s with
    s = a^2 (b - c) of its group.  The duals satisfy
    tr(Q_{mu,i} rho) = sum_{nu,j} tr(Q_{nu,j} rho) tr(Q_{mu,i} G_{nu,j})
    for every state rho.
    """
    p = m.params
    if np.any(np.isnan(p.intra_ratios)):
        raise DegenerateFrame("singleton groups have no dual construction")
    s_vals = p.traces**2 * (p.self_ratios - p.intra_ratios)
    if np.any(s_vals <= 0.0):
        raise DegenerateFrame("self ratio must exceed intra ratio")
    if np.any(p.weights <= 0.0):
        raise DegenerateFrame("group weights must be positive")
    eye = np.eye(m.dim, dtype=complex)
    mm = m.n_groups
    out = []
    for mu, g in enumerate(m.groups):
        shift = (p.traces[mu] - s_vals[mu] / (mm * p.weights[mu])) / m.dim
        out.append(tuple((q - shift * eye) / s_vals[mu] for q in g))
    return tuple(out)
