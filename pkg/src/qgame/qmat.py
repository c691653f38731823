"""Dense complex linear algebra for one- and two-qubit states.

Matrices are plain complex128 ndarrays; instead of wrapping them in classes,
the physics invariants (hermiticity, unit trace, positivity) are checked at
function boundaries.  All entropies are in bits.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "HERMITIAN_TOL",
    "TRACE_TOL",
    "EIGENVALUE_FLOOR",
    "mat_mul",
    "dagger",
    "kron",
    "trace",
    "partial_trace",
    "hermitian_eigenvalues",
    "shannon_entropy",
    "von_neumann_entropy",
    "validate_density_matrix",
    "validate_probabilities",
]

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10

# hermiticity slack for raw eigenvalue calls; looser than the density-matrix
# check because callers may pass operators assembled from many float products
_EIG_HERMITIAN_TOL = 1e-10
_PROB_SUM_TOL = 1e-10
_ENTROPY_CUTOFF = 1e-15


def _as_square(a, name: str = "matrix") -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    if m.shape[0] not in (2, 4):
        raise ValueError(f"{name} must be 2x2 or 4x4, got {m.shape[0]}x{m.shape[0]}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError(f"{name} has non-finite entries")
    return m


def mat_mul(a, b) -> np.ndarray:
    """Product of two square matrices of equal dimension."""
    ma = _as_square(a, "left factor")
    mb = _as_square(b, "right factor")
    if ma.shape != mb.shape:
        raise ValueError(f"dimension mismatch: {ma.shape[0]} vs {mb.shape[0]}")
    return ma @ mb


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return _as_square(a).conj().T


def kron(a, b) -> np.ndarray:
    """Tensor product of two single-qubit operators, left factor = first qubit."""
    ma = _as_square(a, "left factor")
    mb = _as_square(b, "right factor")
    if ma.shape != (2, 2) or mb.shape != (2, 2):
        raise ValueError("kron expects two 2x2 matrices")
    return np.kron(ma, mb)


def trace(a) -> complex:
    return complex(np.trace(_as_square(a)))


def validate_density_matrix(rho, name: str = "state") -> np.ndarray:
    """Check hermiticity, unit trace and positivity; return the ndarray."""
    m = _as_square(rho, name)
    herm = np.abs(m - m.conj().T).max()
    if herm > HERMITIAN_TOL:
        raise ValueError(f"{name} is not Hermitian (deviation {herm:.3e})")
    tr = np.trace(m)
    if abs(tr - 1) > TRACE_TOL:
        raise ValueError(f"{name} has trace {tr}, expected 1")
    lo = np.linalg.eigvalsh(m).min()
    if lo < EIGENVALUE_FLOOR:
        raise ValueError(f"{name} has negative eigenvalue {lo:.3e}")
    return m


def partial_trace(rho, keep: str) -> np.ndarray:
    """Reduce a two-qubit density matrix to the marginal of one qubit.

    keep="A" traces out the second qubit, keep="B" the first.
    """
    m = validate_density_matrix(rho, "two-qubit state")
    if m.shape != (4, 4):
        raise ValueError("partial trace expects a 4x4 state")
    if keep not in ("A", "B"):
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    r = m.reshape(2, 2, 2, 2)
    out = np.einsum("ikjk->ij", r) if keep == "A" else np.einsum("kikj->ij", r)
    return validate_density_matrix(out, "marginal")


def hermitian_eigenvalues(h) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, descending."""
    m = _as_square(h, "operator")
    herm = np.abs(m - m.conj().T).max()
    if herm > _EIG_HERMITIAN_TOL:
        raise ValueError(f"operator is not Hermitian (deviation {herm:.3e})")
    return np.linalg.eigvalsh(m)[::-1]


def validate_probabilities(vec, floor: float = -1e-12) -> np.ndarray:
    """Clamp tiny negative entries to zero and check normalization."""
    p = np.asarray(vec, dtype=float)
    if p.ndim != 1 or p.size not in (2, 4):
        raise ValueError(f"probability vector must have length 2 or 4, got shape {p.shape}")
    if p.min() < floor:
        raise ValueError(f"probability {p.min():.3e} below tolerance")
    p = np.where(p < 0, 0.0, p)
    if abs(p.sum() - 1) > _PROB_SUM_TOL:
        raise ValueError(f"probabilities sum to {p.sum()}, expected 1")
    return p


def shannon_entropy(probs) -> float:
    """H(p) = -sum p_i log2 p_i; zero entries contribute zero."""
    p = validate_probabilities(probs)
    p = p[p > _ENTROPY_CUTOFF]
    return float(-np.sum(p * np.log2(p)))


def von_neumann_entropy(rho) -> float:
    """S(rho) = -sum lambda_i log2 lambda_i over the spectrum."""
    m = validate_density_matrix(rho)
    ev = np.clip(np.linalg.eigvalsh(m), 0.0, 1.0)
    ev = ev[ev > _ENTROPY_CUTOFF]
    return float(-np.sum(ev * np.log2(ev)))
