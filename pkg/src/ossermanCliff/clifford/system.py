from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from ossermanCliff.clifford.hurwitz import radon_number
from ossermanCliff.exceptions import InvalidMu, NonFinite, ShapeMismatch
from ossermanCliff.utils.sampling import make_rng, random_unit_vectors

MU_SEPARATION = 1e-12

DEFAULT_TOLERANCES = {
    "skew": 1e-12,
    "orthogonal": 1e-10,
    "hurwitz": 1e-10,
    "bilinear_form": 1e-10,
}


class CliffordSystem:
    """
    Data of a Cliff(ν)-structure: λ₀, the eigenvalues μ_1..μ_ν and the generators J_s.

    μ values are stored per generator and may repeat.
    """

    def __init__(self, n: int, lambda0: float, mu, J):
        """
        Args:
            n (int): dimension.
            lambda0 (float): eigenvalue on the complement of span(J_s X).
            mu (array_like): ν eigenvalues, each different from lambda0.
            J (array_like): ν matrices of shape (n, n).
        """
        mu = np.array(mu, dtype=float).ravel()
        J = np.array(J, dtype=float)
        if J.size == 0:
            J = np.zeros((0, n, n))
        if J.ndim != 3 or J.shape[1:] != (n, n):
            raise ShapeMismatch(f"generators must have shape (ν, {n}, {n}), got {J.shape}")
        if J.shape[0] != mu.shape[0]:
            raise ShapeMismatch(f"{J.shape[0]} generators but {mu.shape[0]} eigenvalues")
        if not (np.all(np.isfinite(J)) and np.all(np.isfinite(mu)) and np.isfinite(lambda0)):
            raise NonFinite("Clifford system data contains NaN or Inf")
        for s, m in enumerate(mu):
            if abs(m - lambda0) <= MU_SEPARATION * max(1.0, abs(lambda0)):
                raise InvalidMu(f"μ_{s + 1} = {m} coincides with λ₀ = {lambda0}")
        mu.setflags(write=False)
        J.setflags(write=False)
        self._n = int(n)
        self._lambda0 = float(lambda0)
        self._mu = mu
        self._J = J

    @property
    def n(self):
        """Gets the dimension."""
        return self._n

    @property
    def nu(self):
        """Gets the number of generators."""
        return self._J.shape[0]

    @property
    def lambda0(self):
        return self._lambda0

    @property
    def mu(self):
        return self._mu

    @property
    def J(self):
        """Gets the generators as a read-only (ν, n, n) array."""
        return self._J

    def __repr__(self):
        return f"CliffordSystem(n={self.n}, nu={self.nu}, lambda0={self.lambda0:.6g}, mu={list(self.mu)})"


@dataclass(frozen=True)
class CliffordValidation:
    residuals: Dict[str, float]
    tolerances: Dict[str, float]
    radon_ok: bool
    nu: int = 0
    rho: int = 1

    @property
    def passed(self) -> bool:
        within = all(self.residuals[k] <= self.tolerances[k] for k in self.residuals)
        return within and self.radon_ok

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values()) if self.residuals else 0.0

    def failing(self):
        bad = [k for k in self.residuals if self.residuals[k] > self.tolerances[k]]
        if not self.radon_ok:
            bad.append("radon_bound")
        return bad


def validate_clifford(C: CliffordSystem, tol: Optional[float] = None,
                      samples: int = 32, seed: int = 0) -> CliffordValidation:
    """
    Residuals of the Clifford-structure invariants.

    Args:
        C (CliffordSystem): the system.
        tol (float, optional): common threshold for every residual; defaults are
            1e-12 for skew-symmetry and 1e-10 for the others.
        samples (int): random vectors for the ⟨J_sX, J_qX⟩ = δ_sq‖X‖² check.
        seed (int): seed for those vectors.

    Returns:
        CliffordValidation
    """
    n, nu, J = C.n, C.nu, C.J
    tolerances = dict(DEFAULT_TOLERANCES) if tol is None else {k: tol for k in DEFAULT_TOLERANCES}
    rho = radon_number(n)
    if nu == 0:
        residuals = {k: 0.0 for k in DEFAULT_TOLERANCES}
        return CliffordValidation(residuals, tolerances, True, nu, rho)

    eye = np.eye(n)
    skew = max(np.linalg.norm(Js + Js.T) for Js in J)
    orth = max(np.linalg.norm(Js.T @ Js - eye) for Js in J)
    hurwitz = 0.0
    for s in range(nu):
        for q in range(s, nu):
            target = -2.0 * eye if s == q else 0.0
            hurwitz = max(hurwitz, float(np.linalg.norm(J[s] @ J[q] + J[q] @ J[s] - target)))

    X = random_unit_vectors(n, samples, make_rng(seed)) * 2.0
    images = np.einsum("sij,tj->tsi", J, X)              # (samples, ν, n)
    gram = np.einsum("tsi,tqi->tsq", images, images)
    norms = np.einsum("ti,ti->t", X, X)
    bilinear = float(np.max(np.abs(gram - norms[:, None, None] * np.eye(nu))))

    residuals = {
        "skew": float(skew),
        "orthogonal": float(orth),
        "hurwitz": hurwitz,
        "bilinear_form": bilinear,
    }
    return CliffordValidation(residuals, tolerances, nu <= rho - 1, nu, rho)
