import numpy as np

from ossermanCliff.curvature.tensor import CurvatureTensor
from ossermanCliff.exceptions import DimensionMismatch, NotUnit
from ossermanCliff.utils.linalg import orthogonal_complement, sym_eigen
from ossermanCliff.utils.spectrum import SpectrumProfile, cluster_spectrum

UNIT_TOL = 1e-12


def _vector(R: CurvatureTensor, X, name="X") -> np.ndarray:
    X = np.asarray(X, dtype=float).ravel()
    if X.shape[0] != R.n:
        raise DimensionMismatch(f"{name} has length {X.shape[0]}, tensor dimension is {R.n}")
    return X


def require_unit(X, tol: float = UNIT_TOL) -> np.ndarray:
    X = np.asarray(X, dtype=float).ravel()
    norm = float(np.linalg.norm(X))
    if abs(norm - 1.0) > tol:
        raise NotUnit(f"vector norm {norm:.15g} is not 1")
    return X


def curvature_action(R: CurvatureTensor, X, Y, Z) -> np.ndarray:
    """R(X,Y)Z, component m = Σ x_i y_j z_k comps(i,j,k,m)."""
    X, Y, Z = _vector(R, X, "X"), _vector(R, Y, "Y"), _vector(R, Z, "Z")
    return np.einsum("ijkm,i,j,k->m", R.comps, X, Y, Z)


def jacobi(R: CurvatureTensor, X) -> np.ndarray:
    """Matrix of the Jacobi operator R_X : Y ↦ R(X,Y)X (quadratic in X)."""
    X = _vector(R, X)
    J = np.einsum("ijkm,i,k->mj", R.comps, X, X)
    return 0.5 * (J + J.T)


def mixed_jacobi(R: CurvatureTensor, X, Y) -> np.ndarray:
    """Matrix of R_{XY} : Z ↦ ½(R(X,Z)Y + R(Y,Z)X)."""
    X, Y = _vector(R, X, "X"), _vector(R, Y, "Y")
    sym = 0.5 * (np.outer(X, Y) + np.outer(Y, X))
    M = np.einsum("ijkm,ik->mj", R.comps, sym)
    return 0.5 * (M + M.T)


def restricted_eigenvalues(R: CurvatureTensor, X) -> np.ndarray:
    """Ascending eigenvalues of R_X restricted to X^⊥ for a unit vector X."""
    X = require_unit(_vector(R, X))
    B = orthogonal_complement(X)
    return sym_eigen(B.T @ jacobi(R, X) @ B).eigenvalues


def jacobi_spectrum(R: CurvatureTensor, X, rel_tol: float = 1e-9) -> SpectrumProfile:
    """
    Clustered spectrum of the Jacobi operator on X^⊥.

    Args:
        R (CurvatureTensor): the tensor.
        X (array_like): unit vector (norm 1 within 1e-12).
        rel_tol (float): clustering tolerance.

    Returns:
        SpectrumProfile: n − 1 eigenvalues counted with multiplicity.
    """
    return cluster_spectrum(restricted_eigenvalues(R, X), rel_tol)
