import numpy as np
import pytest

from geam import (BadWeights, DegenerateFrame, NotConicalDesign,
                  NotEquiangular, NotNormalized, NotSymmetric, Povm,
                  bloch_to_density, characterize_equiangular,
                  characterize_symmetric, conical_design_params,
                  conical_tensor_residual, dual_operators, from_symmetric,
                  hs_inner, is_informationally_complete,
                  is_projective_2design, mub_vectors, outcome_count_matches,
                  random_density, to_povms, validate_povm)
from geam.linalg import PAULI_X

from conftest import random_states


def trine_povm():
    """The three-outcome qubit POVM used by the five-outcome example."""
    r3 = np.sqrt(3.0)
    return [np.array([[1.0, -1.0j], [1.0j, 1.0]]) / 3.0,
            np.array([[2.0, r3 + 1.0j], [r3 - 1.0j, 2.0]]) / 6.0,
            np.array([[2.0, -r3 + 1.0j], [-r3 - 1.0j, 2.0]]) / 6.0]


def computational_povm():
    return [np.diag([1.0, 0.0]).astype(complex),
            np.diag([0.0, 1.0]).astype(complex)]


# ---------------------------------------------------------------------------
# POVM validation

def test_validate_povm_projective_basis():
    rep = validate_povm(computational_povm())
    assert rep.valid
    assert rep.completeness_residual <= 1e-15


def test_validate_povm_trine():
    assert validate_povm(trine_povm()).valid


def test_validate_povm_overcomplete_identity():
    rep = validate_povm([np.eye(2, dtype=complex), np.eye(2, dtype=complex)])
    assert not rep.valid
    assert rep.completeness_residual == pytest.approx(1.0)


# ---------------------------------------------------------------------------
# symmetric characterization

def test_characterize_symmetric_pauli_bases():
    povms = [[np.outer(v, v.conj()) for v in basis] for basis in mub_vectors(2)]
    s = characterize_symmetric(povms)
    assert np.allclose(s.params.traces, 1.0, atol=1e-12)
    assert np.allclose(s.params.self_overlaps, 1.0, atol=1e-12)
    assert np.allclose(s.params.intra_overlaps, 0.0, atol=1e-12)
    z = s.params.cross_overlaps
    assert np.allclose(z[~np.isnan(z)], 0.5, atol=1e-12)


def test_characterize_symmetric_two_povm_params():
    s = characterize_symmetric([computational_povm(), trine_povm()])
    p = s.params
    assert p.traces == pytest.approx([1.0, 2 / 3], abs=1e-12)
    assert p.self_overlaps == pytest.approx([1.0, 4 / 9], abs=1e-12)
    assert p.intra_overlaps == pytest.approx([0.0, 1 / 9], abs=1e-12)
    assert p.cross_overlaps[0, 1] == pytest.approx(1 / 3, abs=1e-12)


def test_characterize_symmetric_rejects_skewed_pair():
    skew = [np.eye(2) / 2 + 0.1 * np.diag([1.0, -1.0]),
            np.eye(2) / 2 - 0.1 * np.diag([1.0, -1.0])]
    # tr(E_{1,1} F_1) = 0.6 but tr(E_{1,1} F_2) = 0.4: cross overlaps differ
    with pytest.raises(NotSymmetric) as exc:
        characterize_symmetric([computational_povm(), skew])
    assert exc.value.condition == "cross_overlap_uniform"


def test_characterize_symmetric_degenerate():
    flat = [np.eye(2, dtype=complex) / 2, np.eye(2, dtype=complex) / 2]
    with pytest.raises(DegenerateFrame):
        characterize_symmetric([flat, computational_povm()])


# ---------------------------------------------------------------------------
# equiangular constructors

def test_from_symmetric_reproduces_five_outcome_example(two_povm):
    s = characterize_symmetric([computational_povm(), trine_povm()])
    m = from_symmetric([0.4, 0.6], s)
    assert m.params.traces == pytest.approx([0.4, 0.4], abs=1e-12)
    assert m.params.self_ratios == pytest.approx([1.0, 1.0], abs=1e-12)
    assert m.params.intra_ratios[0] == pytest.approx(0.0, abs=1e-12)
    assert m.params.intra_ratios[1] == pytest.approx(0.25, abs=1e-12)
    for g1, g2 in zip(m.groups, two_povm.groups):
        for a, b in zip(g1, g2):
            assert np.max(np.abs(a - b)) <= 1e-14


def test_from_symmetric_mub_weights(mub_design):
    for g, w in zip(mub_design.groups, mub_design.params.weights):
        assert w == pytest.approx(1 / 3, abs=1e-12)
        for q in g:
            assert np.trace(q).real == pytest.approx(1 / 3, abs=1e-12)


def test_from_symmetric_other_weights():
    s = characterize_symmetric([computational_povm(), trine_povm()])
    m = from_symmetric([0.5, 0.5], s)
    assert m.params.traces == pytest.approx([0.5, 1 / 3], abs=1e-12)
    # result still characterizes cleanly
    m2 = characterize_equiangular([list(g) for g in m.groups])
    assert m2.params.cross_ratio == pytest.approx(0.5, abs=1e-12)


def test_from_symmetric_bad_weights():
    s = characterize_symmetric([computational_povm(), trine_povm()])
    with pytest.raises(BadWeights):
        from_symmetric([0.7, 0.4], s)
    with pytest.raises(BadWeights):
        from_symmetric([1.2, -0.2], s)


def test_characterize_equiangular_conical_constants(conical):
    r5 = np.sqrt(5.0)
    p = conical.params
    assert p.weights[0] == pytest.approx((3 * r5 - 5) / 4, abs=1e-12)
    tr_sq = p.traces**2 * p.self_ratios
    assert tr_sq == pytest.approx([(7 - 3 * r5) / 2] * 2, abs=1e-12)
    intra = p.traces**2 * p.intra_ratios
    assert intra == pytest.approx([(7 - 3 * r5) / 8] * 2, abs=1e-12)
    cross = p.cross_ratio * p.traces[0] * p.traces[1]
    assert cross == pytest.approx((7 * r5 - 15) / 8, abs=1e-12)


def test_characterize_round_trip(two_povm):
    again = characterize_equiangular([list(g) for g in two_povm.groups])
    assert np.max(np.abs(again.params.weights - two_povm.params.weights)) <= 1e-12
    assert np.max(np.abs(again.params.traces - two_povm.params.traces)) <= 1e-12
    assert again.params.cross_ratio == pytest.approx(
        two_povm.params.cross_ratio, abs=1e-12)


def test_characterize_equiangular_rejects_perturbation(two_povm):
    groups = [list(g) for g in two_povm.groups]
    groups[1][0] = groups[1][0] + 0.01 * PAULI_X
    with pytest.raises(NotEquiangular):
        characterize_equiangular(groups)


def test_to_povms_recovers_two_povm(two_povm):
    s = to_povms(two_povm)
    want = [computational_povm(), trine_povm()]
    for povm, ref in zip(s.povms, want):
        for a, b in zip(povm.elements, ref):
            assert np.max(np.abs(a - b)) <= 1e-14


def test_to_povms_round_trip_catalog(mub_design, two_povm, conical):
    for m in (mub_design, two_povm, conical):
        s = to_povms(m)
        back = from_symmetric(m.params.weights, s)
        for g1, g2 in zip(m.groups, back.groups):
            for a, b in zip(g1, g2):
                assert np.max(np.abs(a - b)) <= 1e-12
        assert np.max(np.abs(back.params.weights - m.params.weights)) <= 1e-12


def test_informational_completeness(two_povm, mub_design):
    complete, rank = is_informationally_complete(two_povm)
    assert complete and rank == 4
    assert outcome_count_matches(two_povm)  # 5 = 4 + 2 - 1
    complete, rank = is_informationally_complete(mub_design)
    assert complete and rank == 4
    # 3 bases x 2 outcomes satisfy the count identity too: 6 = 4 + 3 - 1
    assert outcome_count_matches(mub_design)


def test_span_rank_single_basis():
    from geam.measurements import operator_span_rank
    assert operator_span_rank(computational_povm()) == 2


def test_conical_design_params(conical, mub_design, two_povm):
    r5 = np.sqrt(5.0)
    cp = conical_design_params(conical)
    assert cp.kappa_minus == pytest.approx((21 - 9 * r5) / 8, abs=1e-12)
    assert cp.trace_avg == pytest.approx(11 * (3 - r5) ** 2 / 16, abs=1e-12)

    cp = conical_design_params(mub_design)
    assert cp.kappa_minus == pytest.approx(1 / 9, abs=1e-12)
    assert cp.trace_avg == pytest.approx(1 / 3, abs=1e-12)

    with pytest.raises(NotConicalDesign):
        conical_design_params(two_povm)  # group constants 4/25 vs 3/25


def test_conical_tensor_identity(conical, mub_design, two_povm):
    assert conical_tensor_residual(conical) <= 1e-10
    assert conical_tensor_residual(mub_design) <= 1e-10
    with pytest.raises(NotConicalDesign):
        conical_tensor_residual(two_povm)


def _tensor_fit_residual(m):
    """Least-squares residual of sum Q (x) Q against span{I (x) I, W}.

    Independent of conical_design_params: solves the 2x2 normal equations
    for the two coefficients and reports the max-norm misfit.
    """
    from geam import swap_and_projectors
    d = m.dim
    w, _, _ = swap_and_projectors(d)
    eye = np.eye(d * d, dtype=complex)
    acc = np.zeros_like(eye)
    for q in m.all_elements():
        acc += np.kron(q, q)
    gram = np.array([[d * d, d], [d, d * d]], dtype=float)
    rhs = np.array([np.trace(acc).real, np.einsum("ij,ji->", acc, w).real])
    a, b = np.linalg.solve(gram, rhs)
    return float(np.max(np.abs(acc - a * eye - b * w)))


def test_conical_equivalence_under_reweighting(mub_design, conical):
    # constant uniformity and the tensor identity succeed or fail together,
    # also under random reweighting of the catalog objects
    rng = np.random.default_rng(42)
    cases = [mub_design, conical]
    for base in (mub_design, conical):
        s = to_povms(base)
        for _ in range(10):
            g = rng.dirichlet(np.ones(base.n_groups) * 5.0)
            cases.append(from_symmetric(g, s))
    for m in cases:
        fit = _tensor_fit_residual(m)
        try:
            conical_design_params(m)
            assert fit <= 1e-9
        except NotConicalDesign:
            assert fit > 1e-9


def test_projective_2design():
    vecs = [v for basis in mub_vectors(2) for v in basis]
    assert is_projective_2design(vecs)
    assert not is_projective_2design(vecs[2:])  # drop one basis
    assert not is_projective_2design([np.array([1.0, 0.0]),
                                      np.array([0.0, 1.0])])
    with pytest.raises(NotNormalized):
        is_projective_2design([np.array([1.0, 1.0])])


# ---------------------------------------------------------------------------
# dual frame

def test_dual_gram_matches_overlap_formula(mub_design, conical):
    for m in (mub_design, conical):
        p = m.params
        duals = dual_operators(m)
        s_vals = p.traces**2 * (p.self_ratios - p.intra_ratios)
        f = p.cross_ratio
        mm = p.n_groups
        flat = [(mu, j) for mu in range(mm) for j in range(p.counts[mu])]
        for mu, i in flat:
            for nu, j in flat:
                got = hs_inner(duals[mu][i], duals[nu][j])
                want = f / (mm * mm * p.weights[mu] * p.weights[nu])
                if mu == nu:
                    want += p.traces[mu]**2 * (p.intra_ratios[mu] - f) / s_vals[mu]**2
                    if i == j:
                        want += 1.0 / s_vals[mu]
                assert abs(got - want) <= 1e-10


def test_dual_self_overlap_mub_value(mub_design):
    # substitute a=1/3, b=1, c=0, f=1/2, gamma=1/3, M=3: tr(G^2) = 5
    duals = dual_operators(mub_design)
    assert hs_inner(duals[0][0], duals[0][0]) == pytest.approx(5.0, abs=1e-10)


def test_dual_reconstruction(conical, mub_design, two_povm):
    for m in (conical, mub_design, two_povm):
        duals = dual_operators(m)
        flat_q = m.all_elements()
        flat_g = [g for grp in duals for g in grp]
        trans = np.array([[hs_inner(q, g) for g in flat_g] for q in flat_q])
        for rho in random_states(2, 100, seed=321):
            probs = m.all_probabilities(rho)
            assert np.max(np.abs(trans @ probs - probs)) <= 1e-10


def test_dual_cross_terms_aggregate(conical):
    # summing tr(Q_nu,j rho) tr(Q_mu,i G_nu,j) over nu != mu gives
    # (M-1) a_mu / (M d) independently of the state
    duals = dual_operators(conical)
    p = conical.params
    rho = random_density(2, 2, 99)
    for mu in range(2):
        for i, q in enumerate(conical.groups[mu]):
            total = 0.0
            for nu in range(2):
                if nu == mu:
                    continue
                for j, g in enumerate(duals[nu]):
                    total += (hs_inner(conical.groups[nu][j], rho)
                              * hs_inner(q, g))
            want = (2 - 1) * p.traces[mu] / (2 * conical.dim)
            assert abs(total - want) <= 1e-10


# ---------------------------------------------------------------------------
# structural invariants

def test_cross_ratio_is_inverse_dimension(mub_design, two_povm, conical, mub3):
    for m in (mub_design, two_povm, conical):
        assert m.params.cross_ratio == pytest.approx(1 / m.dim, abs=1e-12)


def test_derived_constant_identities(mub_design, two_povm, conical):
    for m in (mub_design, two_povm, conical):
        p = m.params
        d = m.dim
        n = np.asarray(p.counts, dtype=float)
        assert np.max(np.abs(p.traces - p.weights * d / n)) <= 1e-12
        derived_c = (n * p.cross_ratio - p.self_ratios) / (n - 1.0)
        assert np.max(np.abs(p.intra_ratios - derived_c)) <= 1e-12


def test_singleton_group_degrades_gracefully():
    # a one-element group is representable: its intra ratio is absent, the
    # averaged and conical relations report themselves inapplicable, and
    # duals refuse cleanly
    g1 = [0.5 * np.eye(2, dtype=complex)]
    g2 = [0.5 * np.diag([1.0, 0.0]).astype(complex),
          0.5 * np.diag([0.0, 1.0]).astype(complex)]
    m = characterize_equiangular([g1, g2])
    assert np.isnan(m.params.intra_ratios[0])
    assert m.params.intra_ratios[1] == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(NotConicalDesign):
        conical_design_params(m)
    with pytest.raises(DegenerateFrame):
        dual_operators(m)
    from geam import evaluate_report
    report = evaluate_report(m, np.eye(2, dtype=complex) / 2, [1.0])
    assert all(not e.applicable for e in report.entries)


def test_conical_scalar_identity(conical, mub_design):
    # sum of squared probabilities equals k_minus purity + k_plus exactly
    for m in (conical, mub_design):
        cp = conical_design_params(m)
        for i, rho in enumerate(random_states(2, 1000, seed=13)):
            probs = m.all_probabilities(rho)
            pur = hs_inner(rho, rho)
            predicted = cp.kappa_minus * pur + cp.kappa_plus
            assert abs(float(np.sum(probs**2)) - predicted) <= 1e-10
