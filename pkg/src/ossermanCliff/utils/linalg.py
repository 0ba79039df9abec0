from typing import NamedTuple, Sequence

import numpy as np
from scipy import linalg

from ossermanCliff.exceptions import NonFinite, NonSymmetric, ShapeMismatch, DimensionMismatch

__all__ = [
    "SpectralDecomposition",
    "check_finite",
    "as_sym_operator",
    "sym_eigen",
    "numeric_rank",
    "image_basis",
    "image_sum_dim",
    "orthogonal_complement",
    "is_orthonormal",
]

# Relative to max(1, max|A_ij|).
SYMMETRY_ATOL = 1e-12

class SpectralDecomposition(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

def check_finite(A, name: str = "matrix") -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if not np.all(np.isfinite(A)):
        raise NonFinite(f"{name} contains NaN or Inf entries")
    return A

def as_sym_operator(A, atol: float = SYMMETRY_ATOL) -> np.ndarray:
    """
    Validate a square symmetric matrix and return its exactly symmetric part.

    Args:
        A (array_like): square matrix.
        atol (float): allowed asymmetry relative to max(1, max|A_ij|).

    Returns:
        np.ndarray: (A + Aᵗ)/2.
    """
    A = check_finite(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got shape {A.shape}")
    if A.size == 0:
        return A
    scale = max(1.0, float(np.max(np.abs(A))))
    residual = float(np.max(np.abs(A - A.T)))
    if residual > atol * scale:
        raise NonSymmetric(f"symmetry residual {residual:.3e} exceeds {atol * scale:.3e}")
    return 0.5 * (A + A.T)

def sym_eigen(A, atol: float = SYMMETRY_ATOL) -> SpectralDecomposition:
    """
    Full eigendecomposition of a symmetric matrix via LAPACK ``syevr``.

    Returns:
        SpectralDecomposition: ascending eigenvalues and orthonormal eigenvector columns.
    """
    S = as_sym_operator(A, atol)
    if S.size == 0:
        return SpectralDecomposition(np.zeros(0), np.zeros((0, 0)))
    w, V = linalg.eigh(S)
    return SpectralDecomposition(w, V)

def numeric_rank(A, tol: float = 1e-8) -> int:
    """Number of singular values above ``tol`` times the largest one."""
    A = check_finite(A)
    if A.size == 0:
        return 0
    s = linalg.svdvals(A)
    if s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))

def image_basis(A, tol: float = 1e-8) -> np.ndarray:
    """Orthonormal basis of the column space of A (n×0 when A vanishes)."""
    A = check_finite(A)
    if A.size == 0 or not np.any(A):
        return np.zeros((A.shape[0], 0))
    return linalg.orth(A, rcond=tol)

def image_sum_dim(ops: Sequence, tol: float = 1e-8) -> int:
    """
    Dimension of Im(op_1) + ... + Im(op_k).

    Each image is replaced by an orthonormal basis before the rank cut so that
    operators of different scale count equally.
    """
    mats = [check_finite(op) for op in ops]
    if not mats:
        return 0
    dims = {m.shape[0] for m in mats}
    if len(dims) != 1:
        raise DimensionMismatch(f"operators have differing dimensions {sorted(dims)}")
    stacked = np.hstack([image_basis(m, tol) for m in mats])
    return numeric_rank(stacked, tol)

def orthogonal_complement(X) -> np.ndarray:
    """Orthonormal basis (n×(n−1)) of the hyperplane orthogonal to X."""
    X = check_finite(X, "vector").ravel()
    return linalg.null_space(X[np.newaxis, :])

def is_orthonormal(vectors: Sequence, atol: float = 1e-10) -> bool:
    V = np.column_stack([np.asarray(v, dtype=float).ravel() for v in vectors])
    gram = V.T @ V
    return bool(np.max(np.abs(gram - np.eye(gram.shape[0]))) <= atol)
