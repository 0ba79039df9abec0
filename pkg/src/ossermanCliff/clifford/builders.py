from typing import Optional

import numpy as np

from ossermanCliff.clifford.hurwitz import generate_hurwitz_family
from ossermanCliff.clifford.system import CliffordSystem, validate_clifford
from ossermanCliff.curvature.tensor import CurvatureTensor
from ossermanCliff.exceptions import InvalidSystem, ShapeMismatch
from ossermanCliff.utils.sampling import make_rng, random_orthonormal_basis
from ossermanCliff.utils.spectrum import SpectrumProfile, cluster_spectrum


def clifford_term(J: np.ndarray) -> np.ndarray:
    """
    Components of 2⟨JX,Y⟩JZ + ⟨JZ,Y⟩JX − ⟨JZ,X⟩JY for one generator.

    With ⟨J e_i, e_j⟩ = J[j, i], entry (i, j, k, l) is
    2 J[j,i] J[l,k] + J[j,k] J[l,i] − J[i,k] J[l,j].
    """
    return (2.0 * np.einsum("ji,lk->ijkl", J, J)
            + np.einsum("jk,li->ijkl", J, J)
            - np.einsum("ik,lj->ijkl", J, J))


def curvature_from_clifford(C: CliffordSystem, tol: Optional[float] = None) -> CurvatureTensor:
    """
    Build the curvature tensor of a Clifford structure:

        R(X,Y)Z = λ₀(⟨X,Z⟩Y − ⟨Y,Z⟩X)
                  + Σ_s (μ_s − λ₀)/3 · (2⟨J_sX,Y⟩J_sZ + ⟨J_sZ,Y⟩J_sX − ⟨J_sZ,X⟩J_sY)

    Args:
        C (CliffordSystem): a valid system.
        tol (float, optional): validation threshold passed to validate_clifford.

    Raises:
        InvalidSystem: if the generators fail validation.
    """
    report = validate_clifford(C, tol=tol)
    if not report.passed:
        raise InvalidSystem(f"Clifford system fails {report.failing()}", report)
    d = np.eye(C.n)
    comps = C.lambda0 * (np.einsum("ik,jl->ijkl", d, d) - np.einsum("jk,il->ijkl", d, d))
    for Js, mu_s in zip(C.J, C.mu):
        comps += (mu_s - C.lambda0) / 3.0 * clifford_term(Js)
    return CurvatureTensor(comps)


def clifford_jacobi(C: CliffordSystem, X) -> np.ndarray:
    """R_X Y = λ₀(‖X‖²Y − ⟨Y,X⟩X) + Σ_s (μ_s − λ₀)⟨J_sX, Y⟩J_sX."""
    X = np.asarray(X, dtype=float).ravel()
    if X.shape[0] != C.n:
        raise ShapeMismatch(f"vector of length {X.shape[0]} for a system on ℝ^{C.n}")
    R = C.lambda0 * (float(X @ X) * np.eye(C.n) - np.outer(X, X))
    for Js, mu_s in zip(C.J, C.mu):
        v = Js @ X
        R += (mu_s - C.lambda0) * np.outer(v, v)
    return R


def clifford_profile(C: CliffordSystem, rel_tol: float = 1e-9) -> SpectrumProfile:
    """Expected Jacobi spectrum on X^⊥: λ₀ with multiplicity n−1−ν together with the μ_s."""
    values = np.concatenate([np.full(C.n - 1 - C.nu, C.lambda0), C.mu])
    return cluster_spectrum(values, rel_tol)


def clifford_system_from_family(n: int, lambda0: float, mu, seed: Optional[int] = None) -> CliffordSystem:
    """
    Clifford system on the standard Hurwitz family, one generator per μ.

    With a seed the family is conjugated by a Haar-random rotation Q
    (J_s ↦ Q J_s Qᵗ), which keeps every Hurwitz relation.

    Raises:
        ExceedsRadonBound: if len(mu) > ρ(n) − 1.
        InvalidMu: if some μ_s equals lambda0.
    """
    mu = np.array(mu, dtype=float).ravel()
    J = generate_hurwitz_family(n, mu.shape[0])
    if seed is not None and J:
        Q = random_orthonormal_basis(n, make_rng(seed))
        J = [Q @ Js @ Q.T for Js in J]
    return CliffordSystem(n, lambda0, mu, J if J else np.zeros((0, n, n)))
