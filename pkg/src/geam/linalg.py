"""Dense complex linear algebra for small-dimension operator work.

Operators are plain complex numpy arrays.  Density matrices are Hermitian,
unit-trace, positive semidefinite arrays; helpers here validate rather than
wrap them.
"""

from __future__ import annotations

import numpy as np

from .errors import (DimensionMismatch, DomainError, InvalidBloch,
                     InvalidRank)

# Tolerances used throughout the package.
HERM_TOL = 1e-10     # entrywise, absolute
PSD_TOL = 1e-10      # eigenvalue floor
STRUCT_TOL = 1e-9    # relative, scalar identities

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def as_operator(a) -> np.ndarray:
    """Coerce to a finite square complex matrix."""
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise DomainError("operator entries must be finite")
    return arr


def is_hermitian(a, tol: float = HERM_TOL) -> bool:
    """True if A equals its conjugate transpose entrywise within tol."""
    arr = as_operator(a)
    return bool(np.max(np.abs(arr - arr.conj().T)) <= tol)


def require_hermitian(a, tol: float = HERM_TOL) -> np.ndarray:
    arr = as_operator(a)
    resid = float(np.max(np.abs(arr - arr.conj().T)))
    if resid > tol:
        raise DomainError(f"operator is not Hermitian, residual {resid:.3e}")
    return arr


def hs_inner(a, b) -> float:
    """Hilbert-Schmidt pairing tr(AB) of two Hermitian operators."""
    aa, bb = as_operator(a), as_operator(b)
    if aa.shape != bb.shape:
        raise DimensionMismatch(f"shapes {aa.shape} and {bb.shape} differ")
    val = complex(np.einsum("ij,ji->", aa, bb))
    if abs(val.imag) > STRUCT_TOL * max(1.0, abs(val.real)):
        raise DomainError(f"trace pairing has imaginary residue {val.imag:.3e}; "
                          "operands are not Hermitian enough")
    return float(val.real)


def is_psd(a, tol: float = PSD_TOL) -> bool:
    """True iff the smallest eigenvalue is >= -tol."""
    arr = require_hermitian(a)
    return bool(np.linalg.eigvalsh(arr)[0] >= -tol)


def min_eigenvalue(a) -> float:
    return float(np.linalg.eigvalsh(as_operator(a))[0])


def purity(rho) -> float:
    """tr(rho^2), between 1/d (maximally mixed) and 1 (pure)."""
    return hs_inner(rho, rho)


def validate_density(rho, tol: float = STRUCT_TOL) -> np.ndarray:
    """Check Hermiticity, unit trace, positivity and purity range; return rho."""
    arr = require_hermitian(rho)
    d = arr.shape[0]
    tr = float(np.trace(arr).real)
    if abs(tr - 1.0) > tol:
        raise DomainError(f"trace {tr} is not 1")
    lo = min_eigenvalue(arr)
    if lo < -PSD_TOL:
        raise DomainError(f"negative eigenvalue {lo:.3e}")
    p = purity(arr)
    if not (1.0 / d - tol <= p <= 1.0 + tol):
        raise DomainError(f"purity {p} outside [1/{d}, 1]")
    return arr


def bloch_to_density(b) -> np.ndarray:
    """Qubit density matrix (I + r . sigma)/2 from a Bloch vector."""
    rx, ry, rz = (float(v) for v in b)
    norm_sq = rx * rx + ry * ry + rz * rz
    if norm_sq > 1.0 + STRUCT_TOL:
        raise InvalidBloch(f"Bloch vector has norm {np.sqrt(norm_sq):.6f} > 1")
    eye = np.eye(2, dtype=complex)
    return (eye + rx * PAULI_X + ry * PAULI_Y + rz * PAULI_Z) / 2.0


def density_to_bloch(rho) -> np.ndarray:
    """Bloch components (tr(rho sigma_x), tr(rho sigma_y), tr(rho sigma_z))."""
    arr = as_operator(rho)
    if arr.shape != (2, 2):
        raise DimensionMismatch("Bloch decomposition needs a 2x2 matrix")
    return np.array([hs_inner(arr, PAULI_X),
                     hs_inner(arr, PAULI_Y),
                     hs_inner(arr, PAULI_Z)])


def random_density(d: int, rank: int, seed) -> np.ndarray:
    """Random density matrix of the given rank, deterministic in the seed.

    rank 1 draws are Haar-distributed pure states; rank d draws follow the
    Hilbert-Schmidt measure (G G*/tr with a d x rank complex Gaussian G).
    `seed` may be an int or a numpy Generator.
    """
    if not 1 <= rank <= d:
        raise InvalidRank(f"rank {rank} not in 1..{d}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    if rank == 1:
        v = g[:, 0] / np.linalg.norm(g[:, 0])
        return np.outer(v, v.conj())
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def swap_operator(d: int) -> np.ndarray:
    """Unitary swap W on H_d (x) H_d, W (u (x) v) = v (x) u."""
    if d < 2:
        raise DomainError("swap needs d >= 2")
    eye = np.eye(d * d, dtype=complex).reshape(d, d, d, d)
    return eye.transpose(1, 0, 2, 3).reshape(d * d, d * d)


def swap_and_projectors(d: int):
    """(W, P_sym, P_asym) on the doubled space.

    P_sym projects on the symmetric subspace of dimension d(d+1)/2,
    P_asym on the antisymmetric one.
    """
    w = swap_operator(d)
    eye = np.eye(d * d, dtype=complex)
    return w, (eye + w) / 2.0, (eye - w) / 2.0
