"""
Jacobi operator of the Cayley projective plane.

A tangent vector is a pair X = (a, b) of octonions, laid out as the
16-vector (a_0..a_7, b_0..b_7). For Y = (c, d) orthogonal to a unit X,

    R_X Y = (α/4) ((4|a|² + |b|²) c + 3 (ab) d*,  (4|b|² + |a|²) d + 3 c* (ab)),

whose spectrum on X^⊥ is α (multiplicity 7) and α/4 (multiplicity 8).
Negative α gives the non-compact dual.
"""
from dataclasses import dataclass

import numpy as np

from ossermanCliff.cayley.octonion import (
    CONJUGATION, Octonion, left_multiplication_matrix, oct_mul, right_multiplication_matrix
)
from ossermanCliff.curvature.jacobi import require_unit
from ossermanCliff.curvature.polarization import tensor_from_jacobi
from ossermanCliff.curvature.tensor import CurvatureTensor
from ossermanCliff.exceptions import ShapeMismatch
from ossermanCliff.utils.linalg import sym_eigen

DIM = 16
# below this |a| or |b| the printed α/4 relation loses rank
DEGENERATE_TOL = 1e-6


@dataclass(frozen=True)
class CayleyPoint:
    a: Octonion
    b: Octonion

    @classmethod
    def from_vector(cls, v) -> "CayleyPoint":
        v = np.asarray(v, dtype=float).ravel()
        if v.shape != (DIM,):
            raise ShapeMismatch(f"a Cayley tangent vector has {DIM} coordinates, got {v.shape[0]}")
        if not np.all(np.isfinite(v)):
            raise ValueError("Cayley tangent vector has non-finite coordinates")
        return cls(Octonion(v[:8]), Octonion(v[8:]))

    def to_vector(self) -> np.ndarray:
        return np.concatenate([self.a.coeffs, self.b.coeffs])

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.to_vector()))


def _as_vector(X) -> np.ndarray:
    if isinstance(X, CayleyPoint):
        return X.to_vector()
    return CayleyPoint.from_vector(X).to_vector()


def _halves(v: np.ndarray):
    return v[:8], v[8:]


def _raw_operator(X: np.ndarray, alpha: float) -> np.ndarray:
    a, b = _halves(X)
    na, nb = float(a @ a), float(b @ b)
    ab = oct_mul(a, b)
    F = np.zeros((DIM, DIM))
    F[:8, :8] = (4.0 * na + nb) * np.eye(8)
    F[8:, 8:] = (4.0 * nb + na) * np.eye(8)
    F[:8, 8:] = 3.0 * left_multiplication_matrix(ab) @ CONJUGATION   # d ↦ (ab) d*
    F[8:, :8] = 3.0 * right_multiplication_matrix(ab) @ CONJUGATION  # c ↦ c* (ab)
    return 0.25 * alpha * F


def cayley_jacobi(X, alpha: float = 1.0) -> np.ndarray:
    """
    16×16 matrix of the Cayley-plane Jacobi operator at a unit vector.

    General Y is first projected onto X^⊥, so R_X X = 0.

    Raises:
        NotUnit: if ‖X‖ differs from 1 by more than 1e-12.
    """
    X = require_unit(_as_vector(X))
    P = np.eye(DIM) - np.outer(X, X)
    op = P @ _raw_operator(X, alpha) @ P
    return 0.5 * (op + op.T)


def cayley_jacobi_quadratic(X, alpha: float = 1.0) -> np.ndarray:
    """Quadratic extension ‖X‖² R_{X/‖X‖}, with the zero vector mapped to 0."""
    X = _as_vector(X)
    norm = float(np.linalg.norm(X))
    if norm == 0.0:
        return np.zeros((DIM, DIM))
    return norm ** 2 * cayley_jacobi(X / norm, alpha)


def cayley_tensor(alpha: float = 1.0) -> CurvatureTensor:
    """Curvature tensor of the Cayley plane (α > 0) or its dual (α < 0), by polarization."""
    return tensor_from_jacobi(lambda X: cayley_jacobi_quadratic(X, alpha), DIM)


def _eigenspace_conditions(X: np.ndarray, target: float, tol: float = 1e-8) -> np.ndarray:
    """I − P where P projects onto the target-eigenspace of the unit-α Jacobi operator."""
    dec = sym_eigen(cayley_jacobi(X))
    V = dec.eigenvectors[:, np.abs(dec.eigenvalues - target) <= tol]
    return np.eye(DIM) - V @ V.T


def e_alpha_conditions(X) -> np.ndarray:
    """
    Linear conditions on Y = (c, d) cutting out E_α(X):
    ad + cb = 0, ⟨a, c⟩ = 0, ⟨b, d⟩ = 0 (10 rows, rank 9).
    """
    X = require_unit(_as_vector(X))
    a, b = _halves(X)
    rows = np.zeros((10, DIM))
    rows[:8, :8] = right_multiplication_matrix(b)
    rows[:8, 8:] = left_multiplication_matrix(a)
    rows[8, :8] = a
    rows[9, 8:] = b
    return rows


def e_quarter_conditions(X) -> np.ndarray:
    """
    Linear conditions on Y = (c, d) cutting out E_{α/4}(X):
    a(|b|²d − ⟨b,d⟩b) = (|a|²c − ⟨a,c⟩a)b together with ⟨Y, X⟩ = 0.

    When a or b (nearly) vanishes the relation degenerates; the conditions are
    then I − P for the eigenprojector P of the Jacobi operator at 1/4.
    """
    X = require_unit(_as_vector(X))
    a, b = _halves(X)
    na, nb = float(a @ a), float(b @ b)
    if min(na, nb) < DEGENERATE_TOL ** 2:
        return _eigenspace_conditions(X, 0.25)
    rows = np.zeros((9, DIM))
    rows[:8, :8] = -right_multiplication_matrix(b) @ (na * np.eye(8) - np.outer(a, a))
    rows[:8, 8:] = left_multiplication_matrix(a) @ (nb * np.eye(8) - np.outer(b, b))
    rows[8] = X
    return rows


def e_alpha_membership(X, Y, tol: float = 1e-10) -> bool:
    """Y ∈ E_α(X): ‖ad + cb‖, |⟨a,c⟩| and |⟨b,d⟩| all within tol."""
    Y = _as_vector(Y)
    return bool(np.max(np.abs(e_alpha_conditions(X) @ Y)) <= tol)


def e_quarter_membership(X, Y, tol: float = 1e-10) -> bool:
    """Y ∈ E_{α/4}(X), with the degenerate a = 0 or b = 0 case decided by the eigenprojector."""
    Y = _as_vector(Y)
    return bool(np.max(np.abs(e_quarter_conditions(X) @ Y)) <= tol)
