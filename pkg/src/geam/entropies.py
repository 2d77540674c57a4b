"""Entropic functionals of discrete probability vectors.

All functions accept array-like input whose last axis indexes outcomes, so
they vectorize over batches of distributions.  Scalars come back as floats.
"""

from __future__ import annotations

import numpy as np

from .errors import AlphaOutOfRange, DomainError
from .linalg import STRUCT_TOL

# Orders this close to 1 take the exact Shannon/ln branch; the closed form
# (x^(1-a) - 1)/(1-a) cancels catastrophically there.
ALPHA_ONE_WINDOW = 1e-9


def clean_probabilities(p, tol: float = STRUCT_TOL) -> np.ndarray:
    """Clamp round-off negatives to zero and renormalize along the last axis."""
    arr = np.asarray(p, dtype=float)
    if arr.shape[-1] == 0:
        raise DomainError("empty probability vector")
    if np.any(arr < -tol):
        raise DomainError(f"negative probability {float(arr.min()):.3e}")
    arr = np.clip(arr, 0.0, None)
    total = arr.sum(axis=-1, keepdims=True)
    if np.any(np.abs(total - 1.0) > tol):
        worst = float(np.max(np.abs(total - 1.0)))
        raise DomainError(f"probabilities sum off by {worst:.3e}")
    return arr / total


def _maybe_float(x: np.ndarray):
    return float(x) if x.ndim == 0 else x


def index_of_coincidence(p):
    """Collision probability sum(p_j^2)."""
    arr = clean_probabilities(p)
    return _maybe_float(np.sum(arr * arr, axis=-1))


def alpha_log(x, alpha: float):
    """Deformed logarithm (x^(1-a) - 1)/(1-a); plain ln at a = 1."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0.0):
        raise DomainError("alpha_log needs positive argument")
    if alpha <= 0.0:
        raise AlphaOutOfRange(f"order {alpha} must be positive")
    if abs(alpha - 1.0) <= ALPHA_ONE_WINDOW:
        return _maybe_float(np.log(arr))
    return _maybe_float((arr ** (1.0 - alpha) - 1.0) / (1.0 - alpha))


def shannon_entropy(p):
    """-sum p ln p with 0 ln 0 = 0."""
    arr = clean_probabilities(p)
    terms = np.where(arr > 0.0, -arr * np.log(np.where(arr > 0.0, arr, 1.0)), 0.0)
    return _maybe_float(np.sum(terms, axis=-1))


def tsallis_entropy(p, alpha: float):
    """(sum p^a - 1)/(1-a); Shannon at a = 1, 1 - sum p^2 at a = 2."""
    if alpha <= 0.0:
        raise AlphaOutOfRange(f"order {alpha} must be positive")
    arr = clean_probabilities(p)
    if abs(alpha - 1.0) <= ALPHA_ONE_WINDOW:
        return shannon_entropy(arr)
    return _maybe_float((np.sum(arr ** alpha, axis=-1) - 1.0) / (1.0 - alpha))


def renyi_entropy(p, alpha: float):
    """ln(sum p^a)/(1-a); Shannon at a = 1, min-entropy in the a -> inf limit."""
    if alpha <= 0.0:
        raise AlphaOutOfRange(f"order {alpha} must be positive")
    if np.isinf(alpha):
        return min_entropy(p)
    arr = clean_probabilities(p)
    if abs(alpha - 1.0) <= ALPHA_ONE_WINDOW:
        return shannon_entropy(arr)
    return _maybe_float(np.log(np.sum(arr ** alpha, axis=-1)) / (1.0 - alpha))


def min_entropy(p):
    """-ln(max p), the infinite-order limit of the Renyi family."""
    arr = clean_probabilities(p)
    return _maybe_float(-np.log(np.max(arr, axis=-1)))


def tsallis_to_renyi(h, alpha: float):
    """Map a Tsallis value to the Renyi value of the same order."""
    if alpha <= 0.0:
        raise AlphaOutOfRange(f"order {alpha} must be positive")
    arr = np.asarray(h, dtype=float)
    if abs(alpha - 1.0) <= ALPHA_ONE_WINDOW:
        return _maybe_float(arr + 0.0)
    inner = 1.0 + (1.0 - alpha) * arr
    if np.any(inner <= 0.0):
        raise DomainError("1 + (1-a) h must stay positive")
    return _maybe_float(np.log(inner) / (1.0 - alpha))
