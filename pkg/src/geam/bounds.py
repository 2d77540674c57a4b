"""Uncertainty bounds on measurement statistics.

Every relation here follows one of two routes.  The *averaged* route bounds
a weighted average over the M POVMs of a symmetric set, with weights
inversely proportional to the self/intra overlap gap; its pivot is an upper
bound on the weighted-average index of coincidence.  The *conical* route
treats the whole equiangular measurement as one probability distribution
whose index of coincidence is known exactly when the elements form a
conical 2-design.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .diagrams import (entropy_floor, max_prob_ceiling, max_prob_floor,
                       pair_prob_ceiling)
from .entropies import (clean_probabilities, index_of_coincidence,
                        renyi_entropy, tsallis_entropy, tsallis_to_renyi)
from .errors import (AlphaOutOfRange, DegenerateFrame, DimensionMismatch,
                     DomainError, GeamError, UnequalOutcomeCounts)
from .linalg import STRUCT_TOL, purity, validate_density
from .measurements import (ConicalDesignParams, EquiangularMeasurement,
                           SymmetricMeasurementSet, SymmetricParams,
                           conical_design_params, to_povms)


@dataclass(frozen=True)
class AveragingWeights:
    """POVM weights 1/(x - y) normalized to sum one.

    `normalizer` is the sum of the raw inverse gaps, the constant that also
    enters the average-coincidence bound.
    """

    values: np.ndarray
    normalizer: float


def averaging_weights(params: SymmetricParams) -> AveragingWeights:
    gaps = params.self_overlaps - params.intra_overlaps
    if np.any(np.isnan(gaps)):
        raise DegenerateFrame("singleton group has no intra overlap, "
                              "averaging weights are undefined")
    if np.any(gaps <= 0.0):
        raise DegenerateFrame("self overlap must exceed intra overlap")
    inv = 1.0 / gaps
    total = float(inv.sum())
    return AveragingWeights(values=inv / total, normalizer=total)


def avg_ic_bound(params: SymmetricParams, state_purity: float, dim: int) -> float:
    """Upper bound on the weighted-average index of coincidence.

    Reads (d tr(rho^2) - 1)/(normalizer d) + sum(w_mu omega_mu)/d; an
    equality for informationally complete sets such as d+1 unbiased
    measurements.
    """
    if not (1.0 / dim - STRUCT_TOL <= state_purity <= 1.0 + STRUCT_TOL):
        raise DomainError(f"purity {state_purity} outside [1/{dim}, 1]")
    wts = averaging_weights(params)
    return ((dim * state_purity - 1.0) / (wts.normalizer * dim)
            + float(np.dot(params.traces, wts.values)) / dim)


def conical_ic(kappa_minus: float, trace_avg: float, dim: int,
               state_purity: float) -> float:
    """Exact index of coincidence of a conical-design measurement:
    kappa_minus tr(rho^2) + (trace_avg - kappa_minus)/d."""
    return kappa_minus * state_purity + (trace_avg - kappa_minus) / dim


def _ic_from_params(cp: ConicalDesignParams, dim: int, state_purity: float) -> float:
    return conical_ic(cp.kappa_minus, cp.trace_avg, dim, state_purity)


def _symmetric_view(m) -> SymmetricMeasurementSet:
    if isinstance(m, EquiangularMeasurement):
        return to_povms(m)
    if isinstance(m, SymmetricMeasurementSet):
        return m
    raise DomainError(f"unsupported measurement type {type(m).__name__}")


def _povm_probabilities(s: SymmetricMeasurementSet, rho) -> list[np.ndarray]:
    return [clean_probabilities(p) for p in s.probabilities(rho)]


# ---------------------------------------------------------------------------
# entropic bounds

def avg_tsallis_rhs(params: SymmetricParams, state_purity: float, dim: int,
                    alpha: float) -> float:
    if not 0.0 < alpha <= 2.0:
        raise AlphaOutOfRange(f"order {alpha} outside (0, 2]")
    return entropy_floor(avg_ic_bound(params, state_purity, dim), alpha)


def avg_tsallis_bound(m, rho, alpha: float) -> tuple[float, float]:
    """(weighted-average Tsallis entropy, its lower bound), order in (0, 2]."""
    s = _symmetric_view(m)
    rho = validate_density(rho)
    wts = averaging_weights(s.params)
    probs = _povm_probabilities(s, rho)
    lhs = float(sum(w * tsallis_entropy(p, alpha)
                    for w, p in zip(wts.values, probs)))
    rhs = avg_tsallis_rhs(s.params, purity(rho), s.dim, alpha)
    return lhs, rhs


def conical_tsallis_rhs(cp: ConicalDesignParams, dim: int,
                        state_purity: float, alpha: float) -> float:
    if not 0.0 < alpha <= 2.0:
        raise AlphaOutOfRange(f"order {alpha} outside (0, 2]")
    return entropy_floor(_ic_from_params(cp, dim, state_purity), alpha)


def conical_tsallis_bound(m: EquiangularMeasurement, rho,
                          alpha: float) -> tuple[float, float]:
    """(full-measurement Tsallis entropy, its lower bound), order in (0, 2]."""
    cp = conical_design_params(m)
    rho = validate_density(rho)
    lhs = tsallis_entropy(m.all_probabilities(rho), alpha)
    return lhs, conical_tsallis_rhs(cp, m.dim, purity(rho), alpha)


def avg_renyi_rhs(params: SymmetricParams, state_purity: float, dim: int,
                  alpha: float) -> float:
    if not 1.0 <= alpha <= 2.0:
        raise AlphaOutOfRange(f"order {alpha} outside [1, 2]")
    return tsallis_to_renyi(
        entropy_floor(avg_ic_bound(params, state_purity, dim), alpha), alpha)


def avg_renyi_bound(m, rho, alpha: float) -> tuple[float, float]:
    """(weighted-average Renyi entropy, its lower bound), order in [1, 2].

    The averaged relation is proven on [1, 2] only, where the mapped floor
    stays convex; other orders are rejected.
    """
    s = _symmetric_view(m)
    rho = validate_density(rho)
    rhs = avg_renyi_rhs(s.params, purity(rho), s.dim, alpha)
    wts = averaging_weights(s.params)
    probs = _povm_probabilities(s, rho)
    lhs = float(sum(w * renyi_entropy(p, alpha)
                    for w, p in zip(wts.values, probs)))
    return lhs, rhs


def conical_renyi_rhs(cp: ConicalDesignParams, dim: int,
                      state_purity: float, alpha: float) -> float:
    if not 0.0 < alpha <= 2.0:
        raise AlphaOutOfRange(f"order {alpha} outside (0, 2]")
    return tsallis_to_renyi(
        entropy_floor(_ic_from_params(cp, dim, state_purity), alpha), alpha)


def conical_renyi_bound(m: EquiangularMeasurement, rho,
                        alpha: float) -> tuple[float, float]:
    """(full-measurement Renyi entropy, its lower bound), order in (0, 2]."""
    cp = conical_design_params(m)
    rho = validate_density(rho)
    lhs = renyi_entropy(m.all_probabilities(rho), alpha)
    return lhs, conical_renyi_rhs(cp, m.dim, purity(rho), alpha)


# ---------------------------------------------------------------------------
# probability bounds

def _common_count(params: SymmetricParams) -> int:
    counts = set(params.counts)
    if len(counts) != 1:
        raise UnequalOutcomeCounts(f"outcome counts {params.counts} differ")
    return counts.pop()


def avg_max_prob_rhs(params: SymmetricParams, state_purity: float,
                     dim: int) -> float:
    n = _common_count(params)
    return max_prob_ceiling(avg_ic_bound(params, state_purity, dim), n)


def avg_max_prob_bound(m, rho, purity_override: float | None = None
                       ) -> tuple[float, float]:
    """(weighted-average maximal probability, its upper bound).

    Needs every POVM to have the same number of outcomes.  With
    purity_override=1 the right side becomes state independent.
    """
    s = _symmetric_view(m)
    rho = validate_density(rho)
    wts = averaging_weights(s.params)
    probs = _povm_probabilities(s, rho)
    lhs = float(sum(w * float(np.max(p)) for w, p in zip(wts.values, probs)))
    p_eff = purity(rho) if purity_override is None else purity_override
    return lhs, avg_max_prob_rhs(s.params, p_eff, s.dim)


def conical_max_prob_bounds(m: EquiangularMeasurement, rho,
                            purity_override: float | None = None
                            ) -> tuple[float | None, float, float]:
    """(lower bound, maximal outcome probability, upper bound).

    Overriding the purity keeps only the upper estimate; the lower curve is
    increasing in the coincidence index, so it would no longer bound from
    below, and None is returned in its place.
    """
    cp = conical_design_params(m)
    rho = validate_density(rho)
    probs = clean_probabilities(m.all_probabilities(rho))
    lhs = float(np.max(probs))
    k = m.n_outcomes
    p_eff = purity(rho) if purity_override is None else purity_override
    x = _ic_from_params(cp, m.dim, p_eff)
    upper = max_prob_ceiling(x, k)
    lower = None if purity_override is not None else max_prob_floor(x)
    return lower, lhs, upper


def _top_pair_sum(p: np.ndarray) -> float:
    if p.size < 2:
        raise UnequalOutcomeCounts("need at least two outcomes for pair sums")
    top = np.sort(p)[-2:]
    return float(top.sum())


def avg_pair_prob_rhs(params: SymmetricParams, state_purity: float,
                      dim: int) -> float:
    n = _common_count(params)
    return pair_prob_ceiling(avg_ic_bound(params, state_purity, dim), n)


def avg_pair_prob_bound(m, rho, purity_override: float | None = None
                        ) -> tuple[float, float]:
    """(weighted-average largest two-outcome sum, its upper bound)."""
    s = _symmetric_view(m)
    rho = validate_density(rho)
    n = _common_count(s.params)
    if n < 2:
        raise UnequalOutcomeCounts("need at least two outcomes per POVM")
    wts = averaging_weights(s.params)
    probs = _povm_probabilities(s, rho)
    lhs = float(sum(w * _top_pair_sum(p) for w, p in zip(wts.values, probs)))
    p_eff = purity(rho) if purity_override is None else purity_override
    return lhs, avg_pair_prob_rhs(s.params, p_eff, s.dim)


def conical_pair_prob_bound(m: EquiangularMeasurement, rho,
                            purity_override: float | None = None
                            ) -> tuple[float, float]:
    """(largest sum of two outcome probabilities, its upper bound) over the
    whole measurement."""
    cp = conical_design_params(m)
    rho = validate_density(rho)
    probs = clean_probabilities(m.all_probabilities(rho))
    lhs = _top_pair_sum(probs)
    p_eff = purity(rho) if purity_override is None else purity_override
    x = _ic_from_params(cp, m.dim, p_eff)
    return lhs, pair_prob_ceiling(x, m.n_outcomes)


def mum_average_ic(dim: int, efficiency: float, state_purity: float) -> float:
    """Average index of coincidence over d+1 unbiased measurements of the
    given efficiency; an exact value, not just a bound."""
    if not (1.0 / dim - STRUCT_TOL <= efficiency <= 1.0 + STRUCT_TOL):
        raise DomainError(f"efficiency {efficiency} outside [1/{dim}, 1]")
    if not (1.0 / dim - STRUCT_TOL <= state_purity <= 1.0 + STRUCT_TOL):
        raise DomainError(f"purity {state_purity} outside [1/{dim}, 1]")
    return (1.0 / (dim + 1.0)
            + (1.0 - efficiency + (efficiency * dim - 1.0) * state_purity)
            / (dim * dim - 1.0))


# ---------------------------------------------------------------------------
# aggregated report

LOWER_BOUND_ENTRIES = ("avg_tsallis", "conical_tsallis",
                       "avg_renyi", "conical_renyi")
UPPER_BOUND_ENTRIES = ("avg_max_prob", "conical_max_prob",
                       "avg_pair_prob", "conical_pair_prob")


@dataclass
class BoundEntry:
    """One evaluated relation: lhs versus rhs plus the state-independent rhs.

    `slack` is lhs - rhs for lower bounds and rhs - lhs for upper bounds;
    for the two-sided maximal-probability entry it is the smaller of the
    two gaps.  Inapplicable entries keep None values and give the reason.
    """

    name: str
    alpha: float | None
    applicable: bool
    reason: str = ""
    lhs: float | None = None
    rhs: float | None = None
    rhs_pure: float | None = None
    lower: float | None = None
    slack: float | None = None


@dataclass
class BoundReport:
    dim: int
    purity: float
    bloch: tuple[float, float, float] | None
    counts: tuple[int, ...]
    group_probabilities: list[np.ndarray]
    group_ic: np.ndarray
    avg_weights: np.ndarray | None
    avg_ic: float | None
    avg_ic_bound: float | None
    full_probabilities: np.ndarray | None
    full_ic: float | None
    group_tsallis: dict[float, np.ndarray] = field(default_factory=dict)
    group_renyi: dict[float, np.ndarray] = field(default_factory=dict)
    full_tsallis: dict[float, float] = field(default_factory=dict)
    full_renyi: dict[float, float] = field(default_factory=dict)
    entries: list[BoundEntry] = field(default_factory=list)

    def entry(self, name: str, alpha: float | None = None) -> BoundEntry:
        for e in self.entries:
            if e.name == name and (alpha is None or e.alpha == alpha):
                return e
        raise KeyError(f"no entry {name!r} at order {alpha}")


def _skip(name: str, alpha: float | None, reason: str) -> BoundEntry:
    return BoundEntry(name=name, alpha=alpha, applicable=False, reason=reason)


def evaluate_report(m, rho, alphas) -> BoundReport:
    """Evaluate every applicable relation for one state.

    Accepts an equiangular measurement or a plain symmetric set; relations
    whose preconditions fail are reported as inapplicable instead of
    raising, so heterogeneous catalogs can be scanned uniformly.  All
    probabilities and entropies are computed once and shared between the
    entries, so sweeping many states stays cheap.
    """
    rho = validate_density(rho)
    geam = m if isinstance(m, EquiangularMeasurement) else None
    s = _symmetric_view(m)
    d = s.dim
    if rho.shape[0] != d:
        raise DimensionMismatch(f"state dimension {rho.shape[0]} does not "
                                f"match measurement dimension {d}")
    state_purity = purity(rho)
    alphas = [float(a) for a in alphas]

    bloch = None
    if d == 2:
        from .linalg import density_to_bloch
        bloch = tuple(float(v) for v in density_to_bloch(rho))

    probs = _povm_probabilities(s, rho)
    group_ic = np.array([index_of_coincidence(p) for p in probs])

    try:
        wts = averaging_weights(s.params)
        avg_weights = wts.values
        avg_ic = float(np.dot(wts.values, group_ic))
        ic_bound = avg_ic_bound(s.params, state_purity, d)
        ic_bound_pure = avg_ic_bound(s.params, 1.0, d)
        avg_reason = ""
    except DegenerateFrame as exc:
        avg_weights = avg_ic = ic_bound = ic_bound_pure = None
        avg_reason = str(exc)

    full_probs = full_ic = None
    cp = None
    conical_reason = ""
    if geam is not None:
        full_probs = clean_probabilities(geam.all_probabilities(rho))
        full_ic = index_of_coincidence(full_probs)
        try:
            cp = conical_design_params(geam)
        except GeamError as exc:
            conical_reason = str(exc)
    else:
        conical_reason = ("measurement came without group weights, so the "
                          "single-measurement relations do not apply")

    report = BoundReport(dim=d, purity=state_purity, bloch=bloch,
                         counts=s.params.counts,
                         group_probabilities=probs, group_ic=group_ic,
                         avg_weights=avg_weights, avg_ic=avg_ic,
                         avg_ic_bound=ic_bound,
                         full_probabilities=full_probs, full_ic=full_ic)

    for a in alphas:
        report.group_tsallis[a] = np.array([tsallis_entropy(p, a) for p in probs])
        report.group_renyi[a] = np.array([renyi_entropy(p, a) for p in probs])
        if full_probs is not None:
            report.full_tsallis[a] = tsallis_entropy(full_probs, a)
            report.full_renyi[a] = renyi_entropy(full_probs, a)

    def lower(name, alpha, lhs, floor_x, floor_x_pure, bridge):
        rhs = entropy_floor(floor_x, alpha)
        rhs_pure = entropy_floor(floor_x_pure, alpha)
        if bridge:
            rhs = tsallis_to_renyi(rhs, alpha)
            rhs_pure = tsallis_to_renyi(rhs_pure, alpha)
        return BoundEntry(name=name, alpha=alpha, applicable=True,
                          lhs=lhs, rhs=rhs, rhs_pure=rhs_pure,
                          slack=lhs - rhs)

    x_con = x_con_pure = None
    if cp is not None:
        x_con = _ic_from_params(cp, d, state_purity)
        x_con_pure = _ic_from_params(cp, d, 1.0)

    for a in alphas:
        entries = report.entries
        if avg_weights is None:
            entries.append(_skip("avg_tsallis", a, avg_reason))
            entries.append(_skip("avg_renyi", a, avg_reason))
        else:
            if 0.0 < a <= 2.0:
                lhs = float(np.dot(avg_weights, report.group_tsallis[a]))
                entries.append(lower("avg_tsallis", a, lhs,
                                     ic_bound, ic_bound_pure, bridge=False))
            else:
                entries.append(_skip("avg_tsallis", a,
                                     f"order {a} outside (0, 2]"))
            if 1.0 <= a <= 2.0:
                lhs = float(np.dot(avg_weights, report.group_renyi[a]))
                entries.append(lower("avg_renyi", a, lhs,
                                     ic_bound, ic_bound_pure, bridge=True))
            else:
                entries.append(_skip("avg_renyi", a,
                                     f"order {a} outside [1, 2]"))
        if cp is None:
            entries.append(_skip("conical_tsallis", a, conical_reason))
            entries.append(_skip("conical_renyi", a, conical_reason))
        elif 0.0 < a <= 2.0:
            entries.append(lower("conical_tsallis", a, report.full_tsallis[a],
                                 x_con, x_con_pure, bridge=False))
            entries.append(lower("conical_renyi", a, report.full_renyi[a],
                                 x_con, x_con_pure, bridge=True))
        else:
            entries.append(_skip("conical_tsallis", a,
                                 f"order {a} outside (0, 2]"))
            entries.append(_skip("conical_renyi", a,
                                 f"order {a} outside (0, 2]"))

    counts = set(s.params.counts)
    if avg_weights is None:
        report.entries.append(_skip("avg_max_prob", None, avg_reason))
        report.entries.append(_skip("avg_pair_prob", None, avg_reason))
    elif len(counts) != 1:
        why = f"outcome counts {s.params.counts} differ"
        report.entries.append(_skip("avg_max_prob", None, why))
        report.entries.append(_skip("avg_pair_prob", None, why))
    else:
        n = counts.pop()
        lhs = float(sum(w * float(np.max(p))
                        for w, p in zip(avg_weights, probs)))
        report.entries.append(BoundEntry(
            name="avg_max_prob", alpha=None, applicable=True, lhs=lhs,
            rhs=max_prob_ceiling(ic_bound, n),
            rhs_pure=max_prob_ceiling(ic_bound_pure, n),
            slack=max_prob_ceiling(ic_bound, n) - lhs))
        if n >= 2:
            lhs = float(sum(w * _top_pair_sum(p)
                            for w, p in zip(avg_weights, probs)))
            report.entries.append(BoundEntry(
                name="avg_pair_prob", alpha=None, applicable=True, lhs=lhs,
                rhs=pair_prob_ceiling(ic_bound, n),
                rhs_pure=pair_prob_ceiling(ic_bound_pure, n),
                slack=pair_prob_ceiling(ic_bound, n) - lhs))
        else:
            report.entries.append(_skip("avg_pair_prob", None,
                                        "single-outcome POVMs have no pairs"))

    if cp is None:
        report.entries.append(_skip("conical_max_prob", None, conical_reason))
        report.entries.append(_skip("conical_pair_prob", None, conical_reason))
    else:
        k = geam.n_outcomes
        lhs = float(np.max(full_probs))
        low = max_prob_floor(x_con)
        upper = max_prob_ceiling(x_con, k)
        report.entries.append(BoundEntry(
            name="conical_max_prob", alpha=None, applicable=True,
            lhs=lhs, rhs=upper, rhs_pure=max_prob_ceiling(x_con_pure, k),
            lower=low, slack=min(upper - lhs, lhs - low)))
        lhs = _top_pair_sum(full_probs)
        rhs = pair_prob_ceiling(x_con, k)
        report.entries.append(BoundEntry(
            name="conical_pair_prob", alpha=None, applicable=True,
            lhs=lhs, rhs=rhs, rhs_pure=pair_prob_ceiling(x_con_pure, k),
            slack=rhs - lhs))

    return report
