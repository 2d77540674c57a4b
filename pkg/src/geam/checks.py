"""Structural and Monte Carlo property suites over the built-in catalog.

These are the machine-checkable facts the library is built around: exact
constants of the catalog objects, round trips, the tensor identity of
conical designs, boundary-curve geometry, and the inequalities of the four
bound families on random states.  Each suite returns per-check results with
the worst slack seen; a negative worst slack beyond -SLACK_TOL is a
violation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bounds, catalog, diagrams, entropies
from .errors import GeamError, NotConicalDesign
from .linalg import purity, random_density
from .measurements import (EquiangularMeasurement, conical_design_params,
                           conical_tensor_residual, dual_operators,
                           equiangular_diagnostics, from_symmetric,
                           is_projective_2design, symmetric_diagnostics,
                           to_povms)

SLACK_TOL = 1e-10
EXACT_TOL = 1e-12
DEFAULT_ALPHAS = (0.3, 0.5, 0.8, 1.0, 1.5, 2.0)


@dataclass
class CheckResult:
    name: str
    checks: int
    violations: int
    worst_slack: float
    note: str = ""
    informational: bool = False  # counted nowhere, printed only

    @property
    def passed(self) -> bool:
        return self.violations == 0


def _result(name: str, slacks, tol: float, note: str = "") -> CheckResult:
    arr = np.asarray(list(slacks), dtype=float)
    if arr.size == 0:
        return CheckResult(name, 0, 0, np.inf, note)
    worst = float(arr.min())
    return CheckResult(name, int(arr.size), int(np.sum(arr < -tol)), worst, note)


def _states(dim: int, count: int, rng, include_fixed: bool = True):
    """Mixed-rank random states; the maximally mixed and a pure basis state
    are always prepended so saturation points are exercised."""
    out = []
    if include_fixed:
        out.append(np.eye(dim, dtype=complex) / dim)
        pure = np.zeros((dim, dim), dtype=complex)
        pure[0, 0] = 1.0
        out.append(pure)
    for i in range(count):
        out.append(random_density(dim, i % dim + 1, rng))
    return out


def _catalog_items():
    return list(catalog.entries().values())


def _as_geam(entry) -> EquiangularMeasurement | None:
    m = entry.measurement
    if isinstance(m, EquiangularMeasurement):
        return m
    try:
        n = m.n_groups
        return from_symmetric(np.full(n, 1.0 / n), m)
    except GeamError:
        return None


# ---------------------------------------------------------------------------
# structural suite (no randomness)

def structure_suite() -> list[CheckResult]:
    results = []

    slacks = []
    for entry in _catalog_items():
        measured = catalog.measured_constants(entry.measurement)
        for key, want in entry.expected.items():
            slacks.append(EXACT_TOL - abs(measured[key] - want))
    results.append(_result("catalog_constants", slacks, 0.0))

    slacks = []
    for entry in _catalog_items():
        m = entry.measurement
        diag = (equiangular_diagnostics(m.groups)
                if isinstance(m, EquiangularMeasurement)
                else symmetric_diagnostics(m.povms))
        slacks.append(1.0 if diag.valid else -1.0)
    results.append(_result("catalog_validators", slacks, 0.0))

    slacks = []
    for entry in _catalog_items():
        m = entry.measurement
        if not isinstance(m, EquiangularMeasurement):
            continue
        s = to_povms(m)
        back = from_symmetric(m.params.weights, s)
        res = max(float(np.max(np.abs(q1 - q2)))
                  for g1, g2 in zip(m.groups, back.groups)
                  for q1, q2 in zip(g1, g2))
        slacks.append(EXACT_TOL - res)
        slacks.append(EXACT_TOL - float(np.max(np.abs(
            m.params.weights - back.params.weights))))
    results.append(_result("round_trip", slacks, 0.0))

    slacks = []
    notes = []
    for entry in _catalog_items():
        g = _as_geam(entry)
        if g is None:
            continue
        try:
            conical_design_params(g)
            slacks.append(SLACK_TOL - conical_tensor_residual(g))
            notes.append(entry.id)
        except NotConicalDesign:
            continue
    results.append(_result("conical_tensor_identity", slacks, 0.0,
                           note=",".join(notes)))

    for d in (2, 3):
        vecs = [v for basis in catalog.mub_vectors(d) for v in basis]
        ok = is_projective_2design(vecs)
        results.append(CheckResult(f"projective_2design_d{d}", 1,
                                   0 if ok else 1, 1.0 if ok else -1.0))

    results.append(_result("diagram_geometry", _diagram_geometry_slacks(), 0.0))
    results.append(_result("dual_gram_identity", _dual_gram_slacks(), 0.0))
    return results


def _diagram_geometry_slacks():
    slacks = []
    grid = np.linspace(1e-4, 1.0, 10_000)
    for alpha in (0.3, 0.5, 1.0, 1.5, 2.0):
        floor = diagrams.entropy_floor(grid, alpha)
        # dominates the smooth curve ln_a(1/X)
        slacks.append(float(np.min(floor - entropies.alpha_log(1.0 / grid, alpha)))
                      + EXACT_TOL)
        # decreasing and convex along the grid
        first = np.diff(floor)
        second = np.diff(first)
        slacks.append(EXACT_TOL - float(np.max(first)))
        slacks.append(float(np.min(second)) + EXACT_TOL)
        # passes through the uniform-distribution points
        for k in range(1, 13):
            gap = abs(diagrams.entropy_floor(1.0 / k, alpha)
                      - entropies.alpha_log(float(k), alpha))
            slacks.append(SLACK_TOL - gap)
    lam = diagrams.max_prob_floor(grid)
    slacks.append(float(np.min(lam - grid)) + EXACT_TOL)
    for k in range(1, 13):
        slacks.append(SLACK_TOL - abs(diagrams.max_prob_floor(1.0 / k) - 1.0 / k))
    for n in range(2, 9):
        gx = np.linspace(1.0 / n, 1.0, 1000)
        slacks.append(SLACK_TOL - abs(diagrams.max_prob_ceiling(1.0 / n, n) - 1.0 / n))
        slacks.append(SLACK_TOL - abs(diagrams.max_prob_ceiling(1.0, n) - 1.0))
        slacks.append(SLACK_TOL - abs(diagrams.pair_prob_ceiling(0.5, n) - 1.0))
        f = diagrams.pair_prob_ceiling(gx, n)
        slacks.append(EXACT_TOL - float(np.max(-np.diff(f))))  # nondecreasing
    return slacks


def _dual_gram_slacks():
    slacks = []
    for entry in _catalog_items():
        g = _as_geam(entry)
        if g is None:
            continue
        p = g.params
        if np.any(np.isnan(p.intra_ratios)):
            continue
        duals = dual_operators(g)
        flat = [(mu, j) for mu in range(p.n_groups)
                for j in range(p.counts[mu])]
        s_vals = p.traces**2 * (p.self_ratios - p.intra_ratios)
        f = p.cross_ratio
        mm = p.n_groups
        for mu, i in flat:
            for nu, j in flat:
                got = float(np.einsum("ij,ji->", duals[mu][i],
                                      duals[nu][j]).real)
                want = f / (mm * mm * p.weights[mu] * p.weights[nu])
                if mu == nu:
                    want += (p.traces[mu]**2
                             * (p.intra_ratios[mu] - f)) / (s_vals[mu]**2)
                    if i == j:
                        want += 1.0 / s_vals[mu]
                slacks.append(SLACK_TOL - abs(got - want))
    return slacks


# ---------------------------------------------------------------------------
# Monte Carlo inequality suite

def _entry_bound_slacks(entry, states, alphas):
    """All applicable bound slacks for one catalog entry over given states."""
    m = entry.measurement
    geam = m if isinstance(m, EquiangularMeasurement) else None
    target = geam if geam is not None else m
    for rho in states:
        report = bounds.evaluate_report(target, rho, alphas)
        for e in report.entries:
            if e.applicable:
                yield e.slack


def inequality_suite(trials: int, seed: int,
                     alphas=DEFAULT_ALPHAS) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results = []
    for entry in _catalog_items():
        m = entry.measurement
        states = _states(m.dim if hasattr(m, "dim") else 2, trials, rng)

        try:
            slacks = list(_entry_bound_slacks(entry, states, alphas))
            results.append(_result(f"bounds[{entry.id}]", slacks, SLACK_TOL))
        except GeamError as exc:
            results.append(CheckResult(f"bounds[{entry.id}]", 1, 1, -np.inf,
                                       note=f"error: {exc}"))

        # averaged coincidence bound on its own
        try:
            s = to_povms(m) if isinstance(m, EquiangularMeasurement) else m
            wts = bounds.averaging_weights(s.params)
            slacks = []
            for rho in states:
                ics = [entropies.index_of_coincidence(p)
                       for p in s.probabilities(rho)]
                avg = float(np.dot(wts.values, ics))
                slacks.append(bounds.avg_ic_bound(s.params, purity(rho), s.dim)
                              - avg)
            results.append(_result(f"avg_ic[{entry.id}]", slacks, SLACK_TOL))
        except GeamError as exc:
            results.append(CheckResult(f"avg_ic[{entry.id}]", 1, 1, -np.inf,
                                       note=f"error: {exc}"))

        # exact coincidence identity for conical designs
        geam = m if isinstance(m, EquiangularMeasurement) else None
        if geam is not None:
            try:
                cp = conical_design_params(geam)
            except NotConicalDesign:
                cp = None
            if cp is not None:
                try:
                    gaps = []
                    for rho in states:
                        measured = entropies.index_of_coincidence(
                            geam.all_probabilities(rho))
                        predicted = bounds.conical_ic(
                            cp.kappa_minus, cp.trace_avg, geam.dim, purity(rho))
                        gaps.append(SLACK_TOL - abs(measured - predicted))
                    results.append(_result(f"conical_ic[{entry.id}]", gaps, 0.0))
                except GeamError as exc:
                    results.append(CheckResult(f"conical_ic[{entry.id}]", 1, 1,
                                               -np.inf, note=f"error: {exc}"))

            # dual-frame reconstruction of probabilities
            try:
                slacks = []
                duals = dual_operators(geam)
                flat_q = geam.all_elements()
                flat_g = [g for grp in duals for g in grp]
                trans = np.array([[np.einsum("ij,ji->", q, g).real
                                   for g in flat_g] for q in flat_q])
                for rho in states[:min(len(states), 100)]:
                    probs = geam.all_probabilities(rho)
                    resid = float(np.max(np.abs(trans @ probs - probs)))
                    slacks.append(SLACK_TOL - resid)
                results.append(_result(f"dual_reconstruction[{entry.id}]",
                                       slacks, 0.0))
            except GeamError as exc:
                results.append(CheckResult(f"dual_reconstruction[{entry.id}]",
                                           1, 1, -np.inf, note=f"error: {exc}"))

    results.extend(distribution_suite(trials, seed + 1))
    return results


def distribution_suite(trials: int, seed: int) -> list[CheckResult]:
    """Boundary-curve inequalities on random probability vectors."""
    rng = np.random.default_rng(seed)
    results = []
    for n in range(2, 9):
        p = rng.dirichlet(np.ones(n), size=max(trials, 1))
        ic = entropies.index_of_coincidence(p)
        slacks = []
        for alpha in (0.3, 0.5, 1.0, 1.5, 2.0):
            h = entropies.tsallis_entropy(p, alpha)
            slacks.extend(h - diagrams.entropy_floor(ic, alpha))
        pmax = np.max(p, axis=-1)
        slacks.extend(pmax - diagrams.max_prob_floor(ic))
        slacks.extend(diagrams.max_prob_ceiling(ic, n) - pmax)
        top2 = np.sort(p, axis=-1)[:, -2:].sum(axis=-1)
        slacks.extend(diagrams.pair_prob_ceiling(ic, n) - top2)
        results.append(_result(f"diagram_bounds[n={n}]", slacks, EXACT_TOL))
    return results


# ---------------------------------------------------------------------------
# unbiased-measurement suite

def mum_structure() -> list[CheckResult]:
    """Deterministic grid check of the unbiased-measurement conditions."""
    slacks = []
    for d in (2, 3, 5):
        for t in (0.3, 0.6, 0.9, 1.0):
            s = catalog.mums_from_mubs(d, t)
            kappa = catalog.mum_efficiency(d, t)
            p = s.params
            gaps = [float(np.max(np.abs(p.traces - 1.0))),
                    float(np.max(np.abs(p.self_overlaps - kappa)))]
            if t > 0.0:
                gaps.append(float(np.max(np.abs(
                    p.intra_overlaps - (1.0 - kappa) / (d - 1.0)))))
            z = p.cross_overlaps[~np.isnan(p.cross_overlaps)]
            gaps.append(float(np.max(np.abs(z - 1.0 / d))))
            slacks.extend(SLACK_TOL - g for g in gaps)
    return [_result("mum_conditions", slacks, 0.0)]


def mum_suite(trials: int, seed: int) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results = mum_structure()

    slacks = []
    for d in (2, 3):
        for t in (0.6, 1.0):
            s = catalog.mums_from_mubs(d, t)
            kappa = catalog.mum_efficiency(d, t)
            wts = bounds.averaging_weights(s.params)
            for rho in _states(d, trials, rng):
                ics = [entropies.index_of_coincidence(p)
                       for p in s.probabilities(rho)]
                avg = float(np.dot(wts.values, ics))
                want = bounds.mum_average_ic(d, kappa, purity(rho))
                slacks.append(SLACK_TOL - abs(avg - want))
                slacks.append(SLACK_TOL - abs(
                    bounds.avg_ic_bound(s.params, purity(rho), d) - want))
    results.append(_result("mum_avg_ic_saturation", slacks, 0.0))

    slacks = []
    for d in (2, 3):
        for t in (0.6, 1.0):
            s = catalog.mums_from_mubs(d, t)
            kappa = catalog.mum_efficiency(d, t)
            for rho in _states(d, max(trials // 5, 1), rng):
                pur = purity(rho)
                lhs, rhs = bounds.avg_max_prob_bound(s, rho)
                closed = (1.0 / d + np.sqrt(max(
                    (kappa * d - 1.0) * (d * pur - 1.0), 0.0) / (d + 1.0)) / d)
                slacks.append(SLACK_TOL - abs(rhs - closed))
                slacks.append(rhs - lhs + SLACK_TOL)
                lhs2, rhs2 = bounds.avg_pair_prob_bound(s, rho)
                curved = (2.0 / d + np.sqrt(2.0 * d - 4.0) / d * np.sqrt(max(
                    (kappa * d - 1.0) * (d * pur - 1.0), 0.0) / (d * d - 1.0)))
                slacks.append(SLACK_TOL - abs(rhs2 - min(curved, 1.0)))
                slacks.append(rhs2 - lhs2 + SLACK_TOL)
    results.append(_result("mum_closed_forms", slacks, 0.0))
    return results


# ---------------------------------------------------------------------------
# unproven-range probe

def renyi_range_probe(trials: int, seed: int,
                      alphas=(0.3, 0.5, 0.8)) -> CheckResult:
    """Test the averaged Renyi relation below order 1, where it is unproven.

    Purely informational: reports how often the would-be bound fails.  The
    right side is evaluated through the same bridge as on [1, 2].
    """
    rng = np.random.default_rng(seed)
    slacks = []
    for entry in _catalog_items():
        m = entry.measurement
        s = to_povms(m) if isinstance(m, EquiangularMeasurement) else m
        try:
            wts = bounds.averaging_weights(s.params)
        except GeamError:
            continue
        for rho in _states(s.dim, trials, rng):
            for alpha in alphas:
                probs = [entropies.clean_probabilities(p)
                         for p in s.probabilities(rho)]
                lhs = float(sum(w * entropies.renyi_entropy(p, alpha)
                                for w, p in zip(wts.values, probs)))
                x = bounds.avg_ic_bound(s.params, purity(rho), s.dim)
                rhs = entropies.tsallis_to_renyi(
                    diagrams.entropy_floor(x, alpha), alpha)
                slacks.append(lhs - rhs)
    res = _result("renyi_below_one_probe", slacks, SLACK_TOL)
    res.note = "unproven range; informational only"
    res.informational = True
    return res


# ---------------------------------------------------------------------------
# driver

SUITES = ("structure", "inequalities", "mums", "all")


def run(suite: str, trials: int, seed: int,
        alpha_extended: bool = False) -> tuple[list[CheckResult], int]:
    """Run a suite; returns (results, exit_code)."""
    if suite not in SUITES:
        raise GeamError(f"unknown suite {suite!r}")
    results: list[CheckResult] = []
    if suite in ("structure", "all"):
        results.extend(structure_suite())
    if suite in ("inequalities", "all") and trials > 0:
        results.extend(inequality_suite(trials, seed))
    if suite in ("mums", "all"):
        results.extend(mum_suite(trials, seed) if trials > 0 else mum_structure())
    probe = renyi_range_probe(trials, seed + 2) if (alpha_extended and trials > 0) else None
    code = 0 if all(r.passed for r in results) else 1
    if probe is not None:
        results.append(probe)  # informational, never affects the exit code
    return results, code
