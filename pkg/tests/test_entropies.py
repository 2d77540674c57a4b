import numpy as np
import pytest

from geam import (AlphaOutOfRange, DomainError, alpha_log,
                  index_of_coincidence, min_entropy, renyi_entropy,
                  shannon_entropy, tsallis_entropy, tsallis_to_renyi)


def test_index_of_coincidence():
    assert index_of_coincidence(np.full(4, 0.25)) == pytest.approx(0.25)
    assert index_of_coincidence([1.0, 0.0, 0.0]) == pytest.approx(1.0)
    assert index_of_coincidence([0.5, 0.3, 0.2]) == pytest.approx(0.38)


def test_alpha_log_values():
    assert alpha_log(1.0, 0.7) == 0.0
    assert alpha_log(np.e, 1.0) == pytest.approx(1.0, abs=1e-14)
    # (5^0.2 - 1)/0.2
    assert alpha_log(5.0, 0.8) == pytest.approx(1.8986483073060745, abs=1e-13)
    with pytest.raises(DomainError):
        alpha_log(0.0, 0.8)
    with pytest.raises(AlphaOutOfRange):
        alpha_log(2.0, -1.0)


def test_tsallis_entropy_values():
    for alpha in (0.3, 1.0, 1.7):
        assert tsallis_entropy(np.full(5, 0.2), alpha) == pytest.approx(
            alpha_log(5.0, alpha), abs=1e-13)
        assert tsallis_entropy([1.0, 0.0, 0.0], alpha) == pytest.approx(0.0, abs=1e-13)
    assert tsallis_entropy([0.5, 0.5], 2.0) == pytest.approx(0.5, abs=1e-14)


def test_tsallis_matches_ic_at_two():
    rng = np.random.default_rng(0)
    p = rng.dirichlet(np.ones(6))
    assert tsallis_entropy(p, 2.0) == pytest.approx(
        1.0 - index_of_coincidence(p), abs=1e-13)


def test_renyi_entropy_values():
    for alpha in (0.5, 1.0, 2.0):
        assert renyi_entropy(np.full(3, 1 / 3), alpha) == pytest.approx(
            np.log(3.0), abs=1e-13)
    # R_2 = -ln I(P)
    assert renyi_entropy([0.5, 0.3, 0.2], 2.0) == pytest.approx(
        0.9675840262617056, abs=1e-13)


def test_renyi_continuity_at_one():
    p = [0.6, 0.3, 0.1]
    h1 = shannon_entropy(p)
    assert renyi_entropy(p, 1.0 + 1e-6) == pytest.approx(h1, abs=1e-6)
    assert renyi_entropy(p, 1.0 - 1e-6) == pytest.approx(h1, abs=1e-6)
    assert renyi_entropy(p, 1.0) == pytest.approx(h1, abs=1e-14)


def test_min_entropy():
    assert min_entropy([0.5, 0.25, 0.25]) == pytest.approx(np.log(2.0))
    assert renyi_entropy([0.5, 0.25, 0.25], np.inf) == pytest.approx(np.log(2.0))


def test_tsallis_to_renyi_bridge_points():
    assert tsallis_to_renyi(0.0, 0.3) == 0.0
    assert tsallis_to_renyi(0.7, 1.0) == pytest.approx(0.7)
    # uniform distribution consistency at order 0.8
    assert tsallis_to_renyi(1.8986483073060745, 0.8) == pytest.approx(
        np.log(5.0), abs=1e-12)
    with pytest.raises(DomainError):
        tsallis_to_renyi(2.1, 2.0)  # 1 + (1-2) 2.1 < 0


def test_bridge_composition_matches_renyi():
    rng = np.random.default_rng(4)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        p = rng.dirichlet(np.ones(n))
        for alpha in (0.3, 0.8, 1.0, 1.5, 2.0):
            direct = renyi_entropy(p, alpha)
            bridged = tsallis_to_renyi(tsallis_entropy(p, alpha), alpha)
            assert abs(direct - bridged) <= 1e-10


def test_permutation_invariance():
    rng = np.random.default_rng(5)
    p = rng.dirichlet(np.ones(7))
    for _ in range(20):
        q = rng.permutation(p)
        assert abs(index_of_coincidence(p) - index_of_coincidence(q)) <= 1e-14
        for alpha in (0.5, 1.0, 2.0):
            assert abs(tsallis_entropy(p, alpha) - tsallis_entropy(q, alpha)) <= 1e-14
            assert abs(renyi_entropy(p, alpha) - renyi_entropy(q, alpha)) <= 1e-14


def test_entropy_ranges_and_jensen_floor():
    rng = np.random.default_rng(6)
    for _ in range(1000):
        n = int(rng.integers(2, 9))
        p = rng.dirichlet(np.ones(n))
        ic = index_of_coincidence(p)
        for alpha in (0.3, 0.8, 1.0, 1.6, 2.0):
            h = tsallis_entropy(p, alpha)
            r = renyi_entropy(p, alpha)
            assert -1e-14 <= h <= alpha_log(float(n), alpha) + 1e-12
            assert -1e-14 <= r <= np.log(n) + 1e-12
            # Jensen: H_a >= ln_a(1/I) for orders in (0, 2]
            assert h >= alpha_log(1.0 / ic, alpha) - 1e-12


def test_negative_roundoff_clamped():
    p = [1.0 + 5e-10, -5e-10]
    assert tsallis_entropy(p, 1.0) == pytest.approx(0.0, abs=1e-9)
    with pytest.raises(DomainError):
        tsallis_entropy([1.2, -0.2], 1.0)
