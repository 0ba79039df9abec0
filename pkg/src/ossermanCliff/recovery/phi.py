"""
The quadratic map Φ(X) = M_XᵗM_X and the generators built from it.

For unit X the operator ΛΦ(X) is similar to Λ. Its eigenvalues are computed
from the symmetric-definite pencil (Λ⁻¹, Φ(X)): Λ⁻¹v = wΦ(X)v gives
ΛΦ(X)v = w⁻¹v, and the pencil eigenvectors come out Φ(X)-orthonormal.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy import linalg

from ossermanCliff.curvature.jacobi import require_unit
from ossermanCliff.exceptions import GaugeFailed, UnstableSubspace
from ossermanCliff.recovery.frame import FactorFrame
from ossermanCliff.recovery.gauge import LambdaOp
from ossermanCliff.utils.sampling import make_rng, random_unit_vectors

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PhiValue:
    matrix: np.ndarray

    @property
    def nu(self) -> int:
        return self.matrix.shape[0]


def phi(frame: FactorFrame, X) -> PhiValue:
    MX = frame.m_of(X)
    P = MX.T @ MX
    return PhiValue(0.5 * (P + P.T))


def _pencil(frame: FactorFrame, X) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues κ of ΛΦ(X), ascending, with Φ(X)-orthonormal eigenvectors."""
    lam = frame.lambda_op
    w, V = linalg.eigh(lam.inverse, phi(frame, X).matrix)
    kappa = 1.0 / w
    order = np.argsort(kappa)
    return kappa[order], V[:, order]


def phi_spectrum(frame: FactorFrame, X) -> np.ndarray:
    """Ascending eigenvalues of ΛΦ(X)."""
    if frame.nu == 0:
        return np.zeros(0)
    return _pencil(frame, X)[0]


def select_target_eigenvalue(lam: LambdaOp) -> Tuple[float, int]:
    """The group value λ_α minimizing λ⁻¹, with its multiplicity."""
    groups = lam.groups()
    value, idx = min(groups, key=lambda g: 1.0 / g[0])
    return value, len(idx)


def phi_semidefinite_gap(frame: FactorFrame, X, lambda_alpha: float) -> float:
    """
    Smallest eigenvalue of sign(λ_α)(λ_αΛ⁻¹ − Φ(X)).

    Non-negative (up to roundoff) for unit X when λ_α minimizes λ⁻¹.
    """
    if frame.nu == 0:
        return 0.0
    form = np.sign(lambda_alpha) * (lambda_alpha * frame.lambda_op.inverse - phi(frame, X).matrix)
    return float(linalg.eigvalsh(0.5 * (form + form.T))[0])


def stable_subspace(frame: FactorFrame, lam: LambdaOp, samples: int = 50,
                    tol: float = 1e-9, seed: int = 0, spectrum_tol: float = 1e-8) -> np.ndarray:
    """
    The λ_α-eigenspace of ΛΦ(X), common to all unit X.

    Args:
        frame (FactorFrame): assembled frame.
        lam (LambdaOp): Λ of the frame.
        samples (int): random unit vectors compared.
        tol (float): largest admissible principal angle between sampled eigenspaces.
        seed (int): PCG64 seed.
        spectrum_tol (float): relative tolerance of the similarity ΛΦ(X) ~ Λ.

    Returns:
        np.ndarray: ν×m_α matrix with orthonormal columns (the identity when Λ
        has a single eigenvalue).

    Raises:
        UnstableSubspace: if ΛΦ(X) is not similar to Λ or the sampled
            eigenspaces disagree.
    """
    groups = lam.groups()
    if len(groups) <= 1:
        return np.eye(lam.nu)
    lambda_alpha, m_alpha = select_target_eigenvalue(lam)
    scale = lam.scale
    reference = None
    worst = 0.0
    for X in random_unit_vectors(frame.n, samples, make_rng(seed)):
        kappa, V = _pencil(frame, X)
        deviation = float(np.max(np.abs(kappa - lam.mu)))
        if deviation > spectrum_tol * scale:
            raise UnstableSubspace(f"ΛΦ(X) spectrum deviates from Λ by {deviation:.3e}")
        selected = np.abs(kappa - lambda_alpha) <= spectrum_tol * scale
        if np.count_nonzero(selected) != m_alpha:
            raise UnstableSubspace(
                f"λ_α={lambda_alpha:.12g} has {np.count_nonzero(selected)} eigenvectors, expected {m_alpha}"
            )
        basis = linalg.orth(V[:, selected])
        if reference is None:
            reference = basis
            continue
        angle = float(np.max(linalg.subspace_angles(reference, basis)))
        worst = max(worst, angle)
        if angle > tol:
            raise UnstableSubspace(f"λ_α-eigenspaces differ by a principal angle of {angle:.3e}")
    logger.info("stable subspace: λ_α=%.12g, dim %d, worst angle %.3e", lambda_alpha, m_alpha, worst)
    return reference


def o_lambda_factor(frame: FactorFrame, X0, tol: float = 1e-8) -> np.ndarray:
    """
    N₀ with N₀ᵗΦ(X₀)N₀ = I and N₀ΛN₀ᵗ = Λ.

    Columns are Φ(X₀)-orthonormal eigenvectors of ΛΦ(X₀) ordered like Λ.

    Raises:
        GaugeFailed: if either defining identity misses tol.
    """
    X0 = require_unit(X0)
    lam = frame.lambda_op
    if lam.nu == 0:
        return np.zeros((0, 0))
    _, N0 = _pencil(frame, X0)
    P = phi(frame, X0).matrix
    scale = lam.scale
    ortho = float(np.linalg.norm(N0.T @ P @ N0 - np.eye(lam.nu)))
    invariance = float(np.linalg.norm(N0 @ lam.matrix @ N0.T - lam.matrix))
    if ortho > tol * scale or invariance > tol * scale:
        raise GaugeFailed(
            f"no O_Λ factorization of Φ(X₀): residuals {ortho:.3e}, {invariance:.3e}"
        )
    return N0


def gauge_generators(frame: FactorFrame, S: np.ndarray, X0, lam: LambdaOp, tol: float = 1e-8,
                     samples: int = 100, seed: int = 0) -> List[np.ndarray]:
    """
    Skew-symmetric generators J_s for the λ_α-eigenvalue group.

    With u_s the λ_α columns of N₀ (projected onto S), J_s is the linear map
    X ↦ M_X u_s, i.e. J_s = Σ_i (M_i u_s) E_iᵗ.

    Raises:
        GaugeFailed: if N₀ cannot be built, J_s is not skew, the Hurwitz form
            ⟨J_sX, J_qX⟩ = δ_sq‖X‖² fails, or J_sX leaves the λ_α-eigenspace.
    """
    lambda_alpha, _ = select_target_eigenvalue(lam)
    N0 = o_lambda_factor(frame, X0, tol)
    U = S @ S.T @ N0[:, lam.group_mask(lambda_alpha)]
    scale = lam.scale

    generators = []
    for s in range(U.shape[1]):
        J = np.einsum("ijk,k,li->jl", frame.M, U[:, s], frame.basis)
        asym = float(np.linalg.norm(J + J.T)) / max(1.0, float(np.linalg.norm(J)))
        if asym > tol * scale:
            raise GaugeFailed(f"J_{s + 1} is not skew-symmetric (residual {asym:.3e})")
        generators.append(0.5 * (J - J.T))

    G = np.stack(generators)
    hurwitz = 0.0
    eigen = 0.0
    for X in random_unit_vectors(frame.n, samples, make_rng(seed)):
        images = G @ X
        hurwitz = max(hurwitz, float(np.max(np.abs(images @ images.T - np.eye(len(generators))))))
        RX = frame.jacobi_of(X)
        eigen = max(eigen, float(np.max(np.abs(images @ RX - lambda_alpha * images))))
    logger.info("gauge generators: %d for λ_α=%.12g, Hurwitz residual %.3e, eigen residual %.3e",
                len(generators), lambda_alpha, hurwitz, eigen)
    if hurwitz > tol * scale:
        raise GaugeFailed(f"generators violate ⟨J_sX, J_qX⟩ = δ_sq by {hurwitz:.3e}")
    if eigen > tol * scale:
        raise GaugeFailed(f"J_sX leaves the λ_α-eigenspace by {eigen:.3e}")
    return generators
