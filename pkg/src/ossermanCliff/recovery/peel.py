import logging
from typing import Sequence

import numpy as np

from ossermanCliff.clifford.builders import curvature_from_clifford
from ossermanCliff.clifford.system import CliffordSystem
from ossermanCliff.curvature.jacobi import jacobi
from ossermanCliff.curvature.tensor import CurvatureTensor
from ossermanCliff.exceptions import InvalidSystem, PeelInconsistent
from ossermanCliff.recovery.frame import FactorFrame
from ossermanCliff.recovery.phi import o_lambda_factor
from ossermanCliff.utils.linalg import sym_eigen
from ossermanCliff.utils.sampling import make_rng, random_unit_vectors

logger = logging.getLogger(__name__)


def peel(Rn: CurvatureTensor, lambda_alpha: float, J_list: Sequence[np.ndarray],
         tol: float = 1e-8, samples: int = 8, seed: int = 0) -> CurvatureTensor:
    """
    Remove the λ_α part R̂_X Y = λ_α Σ_s ⟨J_sX, Y⟩J_sX from a normalized tensor.

    At sampled unit X the remainder's Jacobi spectrum must be that of Rn with
    the m_α eigenvalues nearest λ_α replaced by zeros.

    Raises:
        PeelInconsistent: if R̂ cannot be built or the remainder has the wrong spectrum.
    """
    n, m = Rn.n, len(J_list)
    try:
        R_hat = curvature_from_clifford(CliffordSystem(n, 0.0, [lambda_alpha] * m, J_list), tol=tol)
    except InvalidSystem as err:
        raise PeelInconsistent(f"peeled generators are not a Clifford family: {err}") from err
    remainder = Rn - R_hat

    worst = 0.0
    for X in random_unit_vectors(n, samples, make_rng(seed)):
        before = sym_eigen(jacobi(Rn, X)).eigenvalues
        after = sym_eigen(jacobi(remainder, X)).eigenvalues
        nearest = np.argsort(np.abs(before - lambda_alpha), kind="stable")[:m]
        expected = before.copy()
        expected[nearest] = 0.0
        expected.sort()
        scale = max(1.0, float(np.max(np.abs(before))))
        worst = max(worst, float(np.max(np.abs(after - expected))) / scale)
    logger.info("peeled λ_α=%.12g (%d generators), spectrum residual %.3e", lambda_alpha, m, worst)
    if worst > tol:
        raise PeelInconsistent(f"remainder spectrum deviates from the reduced profile by {worst:.3e}")
    return remainder


def reduce_frame(frame: FactorFrame, X0, lambda_alpha: float, tol: float = 1e-8) -> FactorFrame:
    """
    Frame of the remainder: M_i N₀ with the λ_α columns dropped.

    Raises:
        GaugeFailed: if N₀ cannot be rebuilt at X0.
    """
    N0 = o_lambda_factor(frame, X0, tol)
    keep = ~frame.lambda_op.group_mask(lambda_alpha)
    M = np.einsum("ijk,kl->ijl", frame.M, N0[:, keep])
    return FactorFrame(frame.basis, M, frame.lambda_op.without(lambda_alpha), frame.residuals)
