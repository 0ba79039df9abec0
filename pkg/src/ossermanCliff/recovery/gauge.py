import logging
from typing import List, Tuple

import numpy as np

from ossermanCliff.curvature.jacobi import jacobi, require_unit
from ossermanCliff.curvature.tensor import CurvatureTensor, combine, sphere_tensor
from ossermanCliff.exceptions import InvalidMu, SpectrumMismatch, TieBreakNeeded
from ossermanCliff.utils.linalg import sym_eigen
from ossermanCliff.utils.spectrum import SpectrumProfile

logger = logging.getLogger(__name__)

GROUP_TOL = 1e-12


class LambdaOp:
    """
    Diagonal operator Λ = diag(μ_1, ..., μ_ν) of the nonzero normalized eigenvalues.

    Entries are kept ascending, so equal eigenvalues form contiguous groups.
    """

    def __init__(self, mu):
        mu = np.sort(np.array(mu, dtype=float).ravel())
        if not np.all(np.isfinite(mu)):
            raise InvalidMu("Λ entries must be finite")
        if np.any(mu == 0.0):
            raise InvalidMu("Λ entries must be nonzero")
        mu.setflags(write=False)
        self._mu = mu

    @property
    def mu(self) -> np.ndarray:
        return self._mu

    @property
    def nu(self) -> int:
        return self._mu.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self._mu)

    @property
    def inverse(self) -> np.ndarray:
        return np.diag(1.0 / self._mu)

    @property
    def scale(self) -> float:
        return max(1.0, float(np.max(np.abs(self._mu)))) if self.nu else 1.0

    def groups(self) -> List[Tuple[float, np.ndarray]]:
        """(value, indices) for every eigenvalue group, ascending."""
        if self.nu == 0:
            return []
        breaks = np.flatnonzero(np.diff(self._mu) > GROUP_TOL * self.scale) + 1
        return [(float(self._mu[idx[0]]), idx) for idx in np.split(np.arange(self.nu), breaks)]

    def group_mask(self, value: float) -> np.ndarray:
        return np.abs(self._mu - value) <= GROUP_TOL * self.scale

    def without(self, value: float) -> "LambdaOp":
        return LambdaOp(self._mu[~self.group_mask(value)])

    def __eq__(self, other):
        return isinstance(other, LambdaOp) and np.array_equal(self._mu, other._mu)

    def __repr__(self):
        return f"LambdaOp({list(self._mu)})"


def _pick_lambda0(profile: SpectrumProfile, rel_tol: float) -> float:
    m0 = profile.max_multiplicity
    candidates = [v for v, m in profile if m == m0]
    if len(candidates) == 1:
        return candidates[0]
    candidates.sort(key=abs)
    if abs(abs(candidates[0]) - abs(candidates[1])) <= rel_tol * max(1.0, abs(candidates[1])):
        raise TieBreakNeeded(
            f"eigenvalues {candidates[0]:.12g} and {candidates[1]:.12g} share the maximal "
            f"multiplicity {m0} and the same magnitude"
        )
    logger.warning("eigenvalues %s share the maximal multiplicity %d; using %.12g",
                   candidates, m0, candidates[0])
    return candidates[0]


def normalize(R: CurvatureTensor, profile: SpectrumProfile,
              rel_tol: float = 1e-9) -> Tuple[CurvatureTensor, float, LambdaOp]:
    """
    Shift R by the eigenvalue of maximal multiplicity.

    Args:
        R (CurvatureTensor): an Osserman tensor.
        profile (SpectrumProfile): its Jacobi spectrum on X^⊥.
        rel_tol (float): tolerance for deciding a ±λ tie.

    Returns:
        (R − λ̃₀R¹, λ̃₀, Λ) where Λ holds the remaining eigenvalues minus λ̃₀,
        repeated by multiplicity.
    """
    if len(profile) == 0:
        return R, 0.0, LambdaOp([])
    lambda0 = _pick_lambda0(profile, rel_tol)
    shifted = [(v - lambda0, m) for v, m in profile if v != lambda0]
    lam = LambdaOp(np.repeat([v for v, _ in shifted], [m for _, m in shifted]))
    if lambda0 == 0.0 or R.n < 2:
        return R, lambda0, lam
    Rn = combine(1.0, R, -lambda0, sphere_tensor(R.n))
    logger.debug("normalized by λ̃₀=%.12g, Λ=%s", lambda0, lam)
    return Rn, lambda0, lam


def factor_jacobi(Rn: CurvatureTensor, X, lam: LambdaOp, tol: float = 1e-9) -> np.ndarray:
    """
    Factor R_X = M_X Λ M_Xᵗ with orthonormal columns.

    The full spectrum of R_X (including the zero at X) must be Λ's entries
    padded with n − ν zeros. Columns of M_X are the eigenvectors at the
    nonzero positions and follow Λ's ascending order. M_X is unique up to
    M_X N with N Λ Nᵗ = Λ.

    Raises:
        SpectrumMismatch: if the spectrum of R_X disagrees with Λ beyond tol.
    """
    X = require_unit(X)
    n, nu = Rn.n, lam.nu
    RX = jacobi(Rn, X)
    if nu > n - 1:
        raise SpectrumMismatch(f"Λ has {nu} entries but R_X has at most {n - 1} nonzero eigenvalues")
    dec = sym_eigen(RX)
    expected = np.concatenate([lam.mu, np.zeros(n - nu)])
    order = np.argsort(expected, kind="stable")
    expected = expected[order]
    scale = lam.scale
    deviation = float(np.max(np.abs(dec.eigenvalues - expected)))
    if deviation > tol * scale:
        raise SpectrumMismatch(f"Jacobi spectrum deviates from Λ by {deviation:.3e}")
    # sorted positions that carry a Λ entry, in Λ's own order
    positions = np.empty(nu, dtype=int)
    positions[order[order < nu]] = np.flatnonzero(order < nu)
    M = dec.eigenvectors[:, positions]
    residual = float(np.linalg.norm(M @ lam.matrix @ M.T - RX))
    if residual > tol * scale * max(1, n):
        raise SpectrumMismatch(f"factorization residual {residual:.3e}")
    return M
