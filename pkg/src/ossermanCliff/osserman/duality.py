import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ossermanCliff.curvature.jacobi import jacobi
from ossermanCliff.curvature.tensor import CurvatureTensor
from ossermanCliff.utils.linalg import orthogonal_complement, sym_eigen
from ossermanCliff.utils.sampling import make_rng, random_unit_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualityViolation:
    sample: int
    kind: str          # "eigen" or "kernel"
    eigenvalue: float
    residual: float


@dataclass(frozen=True)
class DualityReport:
    pairs_checked: int
    max_residual: float
    max_kernel_residual: float
    violations: Tuple[DualityViolation, ...]
    tol: float

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "pairs_checked": self.pairs_checked,
            "max_residual": self.max_residual,
            "max_kernel_residual": self.max_kernel_residual,
            "tol": self.tol,
            "violations": [v.__dict__ for v in self.violations],
        }


def _dominant_eigenvalue(eigenvalues: np.ndarray, threshold: float) -> Tuple[float, np.ndarray]:
    """Eigenvalue with the most neighbours within threshold (smallest |λ| on ties)."""
    close = np.abs(eigenvalues[:, None] - eigenvalues[None, :]) <= threshold
    counts = close.sum(axis=1)
    candidates = np.flatnonzero(counts == counts.max())
    best = candidates[np.argmin(np.abs(eigenvalues[candidates]))]
    return float(eigenvalues[best]), np.flatnonzero(close[best])


def duality_check(R: CurvatureTensor, samples: int = 200, tol: float = 1e-9,
                  seed: int = 0, rel_tol: float = 1e-9) -> DualityReport:
    """
    Check the duality principle on sampled pairs.

    For each sample a unit X is drawn and one eigenvector Y of R_X on X^⊥
    (eigenvalue λ) is picked; the residual ‖R_Y X − λX‖ is recorded. The
    kernel form is checked on the tensor shifted by the dominant eigenvalue
    λ₀ at X: with Z in the λ₀-eigenspace and Y' = cos ψ X + sin ψ Z, which is
    neither orthogonal nor parallel to X, ‖(R − λ₀R¹)_{Y'} X‖ must vanish.

    Violations are listed per sample and do not abort the check.
    """
    n = R.n
    rng = make_rng(seed)
    violations = []
    max_res = 0.0
    max_kernel = 0.0
    for t in range(samples):
        X = random_unit_vector(n, rng)
        B = orthogonal_complement(X)
        dec = sym_eigen(B.T @ jacobi(R, X) @ B)
        eigenvalues = dec.eigenvalues
        scale = max(1.0, float(np.max(np.abs(eigenvalues))))

        idx = int(rng.integers(n - 1))
        lam = float(eigenvalues[idx])
        Y = B @ dec.eigenvectors[:, idx]
        residual = float(np.linalg.norm(jacobi(R, Y) @ X - lam * X))
        max_res = max(max_res, residual)
        if residual > tol * scale:
            violations.append(DualityViolation(t, "eigen", lam, residual))

        lam0, members = _dominant_eigenvalue(eigenvalues, rel_tol * scale)
        coeffs = rng.standard_normal(members.size)
        Z = B @ (dec.eigenvectors[:, members] @ coeffs)
        Z /= np.linalg.norm(Z)
        psi = rng.uniform(0.2, np.pi / 2 - 0.2)
        Yp = np.cos(psi) * X + np.sin(psi) * Z
        shifted = jacobi(R, Yp) - lam0 * (float(Yp @ Yp) * np.eye(n) - np.outer(Yp, Yp))
        kernel_residual = float(np.linalg.norm(shifted @ X))
        max_kernel = max(max_kernel, kernel_residual)
        if kernel_residual > tol * scale:
            violations.append(DualityViolation(t, "kernel", lam0, kernel_residual))

    if violations:
        logger.warning("duality check: %d violations over %d samples (max residual %.3e)",
                       len(violations), samples, max(max_res, max_kernel))
    return DualityReport(samples, max_res, max_kernel, tuple(violations), tol)
