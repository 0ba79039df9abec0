import logging
from typing import Dict, Optional

import numpy as np
from scipy import linalg

from ossermanCliff.config import RecoveryConfig
from ossermanCliff.curvature.jacobi import jacobi, mixed_jacobi
from ossermanCliff.curvature.tensor import CurvatureTensor
from ossermanCliff.exceptions import (
    AlignmentFailed, FrameInconsistent, GenericityExhausted, HypothesesViolated, SpectrumMismatch
)
from ossermanCliff.recovery.gauge import LambdaOp, factor_jacobi
from ossermanCliff.recovery.genericity import generic_pair, generic_triple, sample_triples
from ossermanCliff.utils.sampling import make_rng, random_orthonormal_basis, random_unit_vectors

logger = logging.getLogger(__name__)


class FactorFrame:
    """
    Linear factorization X ↦ M_X of the Jacobi operators, R_X = M_X Λ M_Xᵗ.

    ``basis`` holds E_1..E_n as columns and ``M[i]`` is the n×ν matrix M_{E_i};
    M_X = Σ x_i M_i with x_i = ⟨X, E_i⟩.
    """

    def __init__(self, basis, M, lambda_op: LambdaOp, residuals: Optional[Dict[str, float]] = None):
        self.basis = np.asarray(basis, dtype=float)
        self.M = np.asarray(M, dtype=float).reshape(self.basis.shape[0], self.basis.shape[0], lambda_op.nu)
        self.lambda_op = lambda_op
        self.residuals = dict(residuals or {})

    @property
    def n(self) -> int:
        return self.basis.shape[0]

    @property
    def nu(self) -> int:
        return self.lambda_op.nu

    def m_of(self, X) -> np.ndarray:
        x = self.basis.T @ np.asarray(X, dtype=float).ravel()
        return np.einsum("i,ijk->jk", x, self.M)

    def jacobi_of(self, X) -> np.ndarray:
        MX = self.m_of(X)
        return MX @ self.lambda_op.matrix @ MX.T

    def __repr__(self):
        return f"FactorFrame(n={self.n}, nu={self.nu}, lambda={list(self.lambda_op.mu)})"


def align_pair(M1: np.ndarray, Rn: CurvatureTensor, E1, E2, lam: LambdaOp, tol: float = 1e-8) -> np.ndarray:
    """
    The factor M2 of R_{E2} matching M1 across the pair.

    Starting from any factor B of R_{E2}, the gauge N ∈ O_Λ with M2 = B N is
    the solution of the linear system

        B N Λ M1ᵗ + M1 Λ Nᵗ Bᵗ = 2 R_{E1 E2},

    which is unique when Im R_{E1} ∩ Im R_{E2} = 0. One step of iterative
    refinement follows the least-squares solve.

    Raises:
        AlignmentFailed: if the system is rank deficient, inconsistent, or its
            solution is not in O_Λ.
    """
    n, nu = Rn.n, lam.nu
    if nu == 0:
        return np.zeros((n, 0))
    A = np.asarray(M1, dtype=float)
    B = factor_jacobi(Rn, E2, lam, tol)
    C = 2.0 * mixed_jacobi(Rn, E1, E2)
    mu = lam.mu
    L = np.empty((n * n, nu * nu))
    for a in range(nu):
        for b in range(nu):
            term = np.outer(B[:, a], A[:, b])
            L[:, a * nu + b] = mu[b] * (term + term.T).ravel()
    rhs = C.ravel()
    x, _, rank, _ = linalg.lstsq(L, rhs)
    if rank < nu * nu:
        raise AlignmentFailed(f"alignment system has rank {rank} < {nu * nu}; the pair is not generic")
    x = x + linalg.lstsq(L, rhs - L @ x)[0]
    N = x.reshape(nu, nu)

    scale = lam.scale
    cross = float(np.linalg.norm(L @ x - rhs))
    gauge = float(np.linalg.norm(N @ lam.matrix @ N.T - lam.matrix))
    logger.debug("align_pair: cross residual %.3e, O_Λ residual %.3e", cross, gauge)
    if cross > tol * scale:
        raise AlignmentFailed(f"cross-term residual {cross:.3e} exceeds {tol * scale:.3e}")
    if gauge > tol * scale:
        raise AlignmentFailed(f"gauge N leaves O_Λ by {gauge:.3e}")
    return B @ N


def frame_residual(frame: FactorFrame, Rn: CurvatureTensor) -> float:
    """max over i ≤ j of ‖M_iΛM_jᵗ + M_jΛM_iᵗ − 2R_{E_iE_j}‖."""
    Lm = frame.lambda_op.matrix
    E = frame.basis
    worst = 0.0
    for i in range(frame.n):
        for j in range(i, frame.n):
            P = frame.M[i] @ Lm @ frame.M[j].T
            worst = max(worst, float(np.linalg.norm(P + P.T - 2.0 * mixed_jacobi(Rn, E[:, i], E[:, j]))))
    return worst


def sampled_jacobi_residual(frame: FactorFrame, Rn: CurvatureTensor, samples: int, seed: int) -> float:
    """max ‖R_X − M_XΛM_Xᵗ‖ over random unit X."""
    X = random_unit_vectors(Rn.n, samples, make_rng(seed))
    return max((float(np.linalg.norm(jacobi(Rn, x) - frame.jacobi_of(x))) for x in X), default=0.0)


def _basis_is_generic(Rn, E, nu, config: RecoveryConfig, rng) -> bool:
    n, tol = Rn.n, config.tolerances.rank
    for i in range(n):
        for j in range(i + 1, n):
            if not generic_pair(Rn, E[:, i], E[:, j], tol, nu):
                logger.debug("pair (%d, %d) not generic", i, j)
                return False
    if n >= 3 * nu and n >= 3:
        for i, j, k in sample_triples(n, config.triple_samples, rng):
            if not generic_triple(Rn, E[:, i], E[:, j], E[:, k], tol, nu):
                logger.debug("triple (%d, %d, %d) not generic", i, j, k)
                return False
    return True


def assemble_frame(Rn: CurvatureTensor, lam: LambdaOp, config: Optional[RecoveryConfig] = None) -> FactorFrame:
    """
    Assemble a global factor frame from a random generic basis.

    Each draw fixes M_1 by factoring R_{E_1}, aligns every other M_i to it
    and then verifies the pairwise identity for all i, j and R_X = M_XΛM_Xᵗ
    at ``config.check_samples`` random X.

    Args:
        Rn (CurvatureTensor): normalized Osserman tensor.
        lam (LambdaOp): its nonzero eigenvalues.
        config (RecoveryConfig, optional): tolerances, seed and draw budget.

    Returns:
        FactorFrame

    Raises:
        GenericityExhausted: no generic basis within ``config.max_redraws`` draws.
        FrameInconsistent: factorization, alignment or verification failed.
        HypothesesViolated: n < 3ν without ``config.force``.
    """
    config = config or RecoveryConfig()
    tols = config.tolerances
    n, nu = Rn.n, lam.nu
    if n < 3 * nu:
        if not config.force:
            raise HypothesesViolated(f"n={n} < 3ν={3 * nu}", stage="frame")
        logger.warning("n=%d < 3ν=%d: triple genericity is not checked", n, 3 * nu)

    rng = make_rng(config.seed)
    for draw in range(config.max_redraws):
        E = random_orthonormal_basis(n, rng)
        try:
            M1 = factor_jacobi(Rn, E[:, 0], lam, tols.factor)
        except SpectrumMismatch as err:
            raise FrameInconsistent(f"cannot factor R_E1: {err}") from err
        if not _basis_is_generic(Rn, E, nu, config, rng):
            continue
        try:
            M = [M1] + [align_pair(M1, Rn, E[:, 0], E[:, i], lam, tols.frame) for i in range(1, n)]
        except (SpectrumMismatch, AlignmentFailed) as err:
            raise FrameInconsistent(f"alignment failed on draw {draw}: {err}") from err

        frame = FactorFrame(E, np.stack(M) if M else np.zeros((n, n, nu)), lam)
        scale = lam.scale
        pairwise = frame_residual(frame, Rn)
        sampled = sampled_jacobi_residual(frame, Rn, config.check_samples, config.seed + draw + 1)
        frame.residuals.update({"pairwise": pairwise, "sampled_jacobi": sampled, "draws": draw + 1})
        logger.info("frame assembled on draw %d: pairwise %.3e, sampled %.3e", draw + 1, pairwise, sampled)
        if pairwise > tols.frame * scale or sampled > tols.frame * scale:
            raise FrameInconsistent(
                f"frame identities fail (pairwise {pairwise:.3e}, sampled {sampled:.3e})"
            )
        return frame
    raise GenericityExhausted(f"no generic basis in {config.max_redraws} draws")
