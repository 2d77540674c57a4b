import numpy as np
import pytest

from geam import (DomainError, alpha_log, entropy_floor, max_prob_ceiling,
                  max_prob_floor, pair_prob_ceiling, segment_coefficients)


def test_entropy_floor_endpoints():
    for alpha in (0.3, 1.0, 2.0):
        assert entropy_floor(1.0, alpha) == pytest.approx(0.0, abs=1e-14)
    for k in range(1, 13):
        for alpha in (0.3, 0.8, 1.0, 1.5, 2.0):
            assert entropy_floor(1.0 / k, alpha) == pytest.approx(
                alpha_log(float(k), alpha), abs=1e-12)


def test_entropy_floor_known_value():
    # chord through (1/3, ln 3) and (1/2, ln 2) evaluated at 0.4:
    # u = 3 ln 3 - 2 ln 2, v = 6 (ln 3 - ln 2)
    assert entropy_floor(0.4, 1.0) == pytest.approx(0.9364262454248438, abs=1e-13)
    u, v = segment_coefficients(2, 1.0)
    assert u == pytest.approx(1.9095425048844386, abs=1e-13)
    assert v == pytest.approx(2.4327906486489868, abs=1e-13)


def test_entropy_floor_segments_agree_at_joints():
    for alpha in (0.3, 1.0, 2.0):
        for k in range(1, 12):
            x = 1.0 / (k + 1)
            u_lo, v_lo = segment_coefficients(k, alpha)
            u_hi, v_hi = segment_coefficients(k + 1, alpha)
            assert u_lo - v_lo * x == pytest.approx(u_hi - v_hi * x, abs=1e-12)


def test_entropy_floor_domain():
    with pytest.raises(DomainError):
        entropy_floor(0.0, 1.0)
    with pytest.raises(DomainError):
        entropy_floor(1.1, 1.0)
    with pytest.raises(DomainError):
        entropy_floor(0.5, 2.5)
    with pytest.raises(DomainError):
        entropy_floor(0.5, 0.0)
    # round-off just above 1 is clamped
    assert entropy_floor(1.0 + 1e-10, 1.0) == pytest.approx(0.0, abs=1e-14)


def test_entropy_floor_dominates_smooth_curve():
    grid = np.linspace(1e-4, 1.0, 10_000)
    for alpha in (0.3, 0.5, 1.0, 1.5, 2.0):
        floor = entropy_floor(grid, alpha)
        assert np.min(floor - alpha_log(1.0 / grid, alpha)) >= -1e-10
        # decreasing, convex
        assert np.max(np.diff(floor)) <= 1e-12
        assert np.min(np.diff(np.diff(floor))) >= -1e-12


def test_max_prob_floor_values():
    assert max_prob_floor(1.0) == pytest.approx(1.0, abs=1e-14)
    for k in range(1, 13):
        assert max_prob_floor(1.0 / k) == pytest.approx(1.0 / k, abs=1e-12)
    assert max_prob_floor(0.3) == pytest.approx(0.31454972243679025, abs=1e-13)
    grid = np.linspace(1e-4, 1.0, 5000)
    lam = max_prob_floor(grid)
    assert np.min(lam - grid) >= -1e-12       # dominates the diagonal
    assert np.min(np.diff(lam)) >= -1e-12     # nondecreasing


def test_max_prob_ceiling_values():
    for n in range(2, 9):
        assert max_prob_ceiling(1.0 / n, n) == pytest.approx(1.0 / n, abs=1e-13)
        assert max_prob_ceiling(1.0, n) == pytest.approx(1.0, abs=1e-13)
    assert max_prob_ceiling(0.255322, 5) == pytest.approx(
        0.4103749034462048, abs=1e-13)
    with pytest.raises(DomainError):
        max_prob_ceiling(0.1, 5)  # below 1/N


def test_max_prob_ceiling_concavity():
    grid = np.linspace(0.2, 1.0, 4000)
    vals = max_prob_ceiling(grid, 5)
    assert np.max(np.diff(np.diff(vals))) <= 1e-12


def test_pair_prob_ceiling_values():
    for n in range(2, 9):
        assert pair_prob_ceiling(1.0 / n, n) == pytest.approx(2.0 / n, abs=1e-13)
        assert pair_prob_ceiling(0.75, n) == 1.0
        assert pair_prob_ceiling(0.5, n) == pytest.approx(1.0, abs=1e-12)
    assert pair_prob_ceiling(0.255322, 5) == pytest.approx(
        0.65765558406524, abs=1e-13)
    # two outcomes: curved branch degenerates, bound is 1 everywhere
    assert pair_prob_ceiling(0.5, 2) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        pair_prob_ceiling(0.4, 1)


def test_pair_prob_ceiling_shape():
    grid = np.linspace(0.2, 1.0, 4000)
    vals = pair_prob_ceiling(grid, 5)
    assert np.min(np.diff(vals)) >= -1e-14    # nondecreasing
    low = grid <= 0.5
    assert np.max(np.diff(np.diff(vals[low]))) <= 1e-12  # concave below 1/2


@pytest.mark.parametrize("n", range(2, 9))
def test_bounds_hold_on_random_distributions(n):
    rng = np.random.default_rng(100 + n)
    p = rng.dirichlet(np.ones(n), size=10_000)
    ic = np.sum(p * p, axis=-1)
    pmax = np.max(p, axis=-1)
    top2 = np.sort(p, axis=-1)[:, -2:].sum(axis=-1)
    assert np.min(pmax - max_prob_floor(ic)) >= -1e-12
    assert np.min(max_prob_ceiling(ic, n) - pmax) >= -1e-12
    assert np.min(pair_prob_ceiling(ic, n) - top2) >= -1e-12
    for alpha in (0.3, 0.5, 1.0, 1.5, 2.0):
        if alpha == 1.0:
            h = -np.sum(np.where(p > 0, p * np.log(np.where(p > 0, p, 1.0)), 0.0),
                        axis=-1)
        else:
            h = (1.0 - np.sum(p ** alpha, axis=-1)) / (alpha - 1.0)
        assert np.min(h - entropy_floor(ic, alpha)) >= -1e-12
