"""Boundary curves of coincidence-index information diagrams.

The abscissa X is an index of coincidence, so X lives in (0, 1].  Values up
to 1 + STRUCT_TOL are clamped to 1 because the index of a near-pure state
can overshoot by machine epsilon.  Everything vectorizes over X.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .linalg import STRUCT_TOL


def _clamped(x, lo: float) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(arr < lo - STRUCT_TOL) or np.any(arr > 1.0 + STRUCT_TOL):
        raise DomainError(f"index of coincidence outside [{lo}, 1]")
    return np.clip(arr, lo, 1.0)


def _maybe_float(x: np.ndarray):
    return float(x) if x.ndim == 0 else x


def segment_coefficients(k: int, alpha: float) -> tuple[float, float]:
    """(intercept, slope magnitude) of the chord of ln_a(1/X) through
    the grid points X = 1/(k+1) and X = 1/k.

    The textbook expressions (k+1) ln_a(k+1) - k ln_a(k) and
    k (k+1) {ln_a(k+1) - ln_a(k)} cancel catastrophically for large k, so
    the powers are differenced through expm1/log1p instead.
    """
    if k < 1:
        raise DomainError("segment index must be >= 1")
    kf = float(k)
    step = np.log1p(1.0 / kf)
    if abs(alpha - 1.0) <= 1e-9:
        return np.log(kf + 1.0) + kf * step, kf * (kf + 1.0) * step
    # (k+1)^p - k^p computed as k^p expm1(p log1p(1/k)), p = 2-a and 1-a
    diff2 = kf ** (2.0 - alpha) * np.expm1((2.0 - alpha) * step)
    diff1 = kf ** (1.0 - alpha) * np.expm1((1.0 - alpha) * step)
    return (diff2 - 1.0) / (1.0 - alpha), kf * (kf + 1.0) * diff1 / (1.0 - alpha)


def entropy_floor(x, alpha: float):
    """Piecewise-linear lower bound on the order-a entropy at coincidence X.

    The polygon interpolates the uniform-distribution points (1/k, ln_a(k)),
    which makes it decreasing and convex and everywhere at least ln_a(1/X).
    Proven as an entropy bound for orders in (0, 2] only, so other orders
    are rejected.
    """
    if not 0.0 < alpha <= 2.0:
        raise DomainError(f"order {alpha} outside (0, 2]")
    arr = _clamped(x, 0.0)
    if np.any(arr <= 0.0):
        raise DomainError("index of coincidence must be positive")
    k = np.floor(1.0 / arr).astype(int)
    ks = np.unique(k)
    out = np.empty_like(arr)
    for kk in ks:
        u, v = segment_coefficients(int(kk), alpha)
        sel = k == kk
        out[sel] = u - v * arr[sel]
    return _maybe_float(out)


def max_prob_floor(x):
    """Lower bound on the maximal probability at coincidence X.

    On X in [1/k, 1/(k-1)] the curve is (1 + sqrt((kX-1)/(k-1)))/k; it
    touches the diagonal at the grid points (1/k, 1/k).
    """
    arr = _clamped(x, 0.0)
    if np.any(arr <= 0.0):
        raise DomainError("index of coincidence must be positive")
    k = np.maximum(np.ceil(1.0 / arr).astype(int), 2)
    rad = (k * arr - 1.0) / (k - 1.0)
    rad = np.clip(rad, 0.0, None)  # exact grid points can round to -eps
    return _maybe_float((1.0 + np.sqrt(rad)) / k)


def max_prob_ceiling(x, n: int):
    """Upper bound (1 + sqrt(n-1) sqrt(nX-1))/n on the maximal probability
    of an n-outcome distribution with coincidence X."""
    if n < 1:
        raise DomainError("outcome count must be >= 1")
    arr = _clamped(x, 1.0 / n)
    rad = np.clip(n * arr - 1.0, 0.0, None)
    return _maybe_float((1.0 + np.sqrt(n - 1.0) * np.sqrt(rad)) / n)


def pair_prob_ceiling(x, n: int):
    """Upper bound on the largest sum of two probabilities of an n-outcome
    distribution with coincidence X.

    Below X = 1/2 the bound is (2 + sqrt(2n-4) sqrt(nX-1))/n; above it the
    trivial value 1 takes over, and the two branches agree at X = 1/2.
    """
    if n < 2:
        raise DomainError("pair bound needs at least two outcomes")
    arr = _clamped(x, 1.0 / n)
    rad = np.clip(n * arr - 1.0, 0.0, None)
    curved = (2.0 + np.sqrt(2.0 * n - 4.0) * np.sqrt(rad)) / n
    return _maybe_float(np.where(arr <= 0.5, np.minimum(curved, 1.0), 1.0))
