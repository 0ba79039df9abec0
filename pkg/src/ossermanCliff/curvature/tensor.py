from dataclasses import dataclass
from typing import Dict, Union

import numpy as np

from ossermanCliff.exceptions import DimensionMismatch, NonFinite, ShapeMismatch

VALIDATION_TOL = 1e-10


class CurvatureTensor:
    """
    An algebraic curvature tensor stored as its full (4,0) component array.

    Entry (i, j, k, l) is ⟨R(e_i, e_j)e_k, e_l⟩ in the standard orthonormal
    basis. The component array is read-only once constructed.
    """

    def __init__(self, comps, n: int = None):
        """
        Args:
            comps (array_like): n⁴ components, either flat (row-major) or shaped (n, n, n, n).
            n (int, optional): dimension; inferred from ``comps`` when omitted.
        """
        arr = np.array(comps, dtype=float)
        if n is None:
            if arr.ndim == 4:
                n = arr.shape[0]
            else:
                n = int(round(arr.size ** 0.25))
        if n < 1 or arr.size != n ** 4:
            raise ShapeMismatch(f"{arr.size} components do not form an n⁴ array for n={n}")
        if not np.all(np.isfinite(arr)):
            raise NonFinite("curvature components contain NaN or Inf")
        arr = arr.reshape((n, n, n, n))
        arr.setflags(write=False)
        self._n = n
        self._comps = arr

    @classmethod
    def zeros(cls, n: int) -> "CurvatureTensor":
        return cls(np.zeros((n, n, n, n)))

    @property
    def n(self):
        """Gets the dimension of the underlying space."""
        return self._n

    @property
    def comps(self):
        """Gets the read-only (n, n, n, n) component array."""
        return self._comps

    @property
    def flat(self):
        """Gets the components flattened in (i, j, k, l) row-major order."""
        return self._comps.ravel()

    @property
    def norm(self):
        """Gets the largest absolute component."""
        return float(np.max(np.abs(self._comps)))

    def is_zero(self, atol: float = 1e-12) -> bool:
        return self.norm <= atol

    def __sub__(self, other):
        return combine(1.0, self, -1.0, other)

    def __add__(self, other):
        return combine(1.0, self, 1.0, other)

    def __repr__(self):
        return f"CurvatureTensor(n={self._n}, max|comp|={self.norm:.6g})"


@dataclass(frozen=True)
class TensorValidation:
    residuals: Dict[str, float]
    tol: float = VALIDATION_TOL

    @property
    def passed(self) -> bool:
        return all(r <= self.tol for r in self.residuals.values())

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    def failing(self):
        return [k for k, r in self.residuals.items() if r > self.tol]


def _as_comps(R: Union[CurvatureTensor, np.ndarray]) -> np.ndarray:
    if isinstance(R, CurvatureTensor):
        return R.comps
    arr = np.asarray(R, dtype=float)
    n = int(round(arr.size ** 0.25))
    if n < 1 or arr.size != n ** 4:
        raise ShapeMismatch(f"{arr.size} components do not form an n⁴ array")
    return arr.reshape((n, n, n, n))


def validate_tensor(R, tol: float = VALIDATION_TOL) -> TensorValidation:
    """
    Maximal absolute residual of each curvature symmetry.

    Args:
        R (CurvatureTensor or array_like): tensor or raw component array.
        tol (float): pass threshold for every residual.

    Returns:
        TensorValidation: residuals keyed by 'antisymmetry_ij', 'antisymmetry_kl',
        'pair_exchange' and 'bianchi'.
    """
    C = _as_comps(R)
    residuals = {
        "antisymmetry_ij": float(np.max(np.abs(C + C.transpose(1, 0, 2, 3)))),
        "antisymmetry_kl": float(np.max(np.abs(C + C.transpose(0, 1, 3, 2)))),
        "pair_exchange": float(np.max(np.abs(C - C.transpose(2, 3, 0, 1)))),
        "bianchi": float(np.max(np.abs(
            C + np.einsum("jkil->ijkl", C) + np.einsum("kijl->ijkl", C)
        ))),
    }
    return TensorValidation(residuals, tol)


def sphere_tensor(n: int) -> CurvatureTensor:
    """Curvature tensor of the unit sphere: R(X,Y)Z = ⟨X,Z⟩Y − ⟨Y,Z⟩X."""
    if n < 2:
        raise ValueError("sphere_tensor needs n >= 2")
    d = np.eye(n)
    comps = np.einsum("ik,jl->ijkl", d, d) - np.einsum("jk,il->ijkl", d, d)
    return CurvatureTensor(comps)


def combine(a: float, R1: CurvatureTensor, b: float, R2: CurvatureTensor) -> CurvatureTensor:
    """Componentwise a·R1 + b·R2."""
    if R1.n != R2.n:
        raise DimensionMismatch(f"cannot combine tensors of dimension {R1.n} and {R2.n}")
    return CurvatureTensor(a * R1.comps + b * R2.comps)
