from typing import Optional, Sequence

import numpy as np

from ossermanCliff.curvature.jacobi import jacobi
from ossermanCliff.curvature.tensor import CurvatureTensor
from ossermanCliff.exceptions import NotOrthonormal
from ossermanCliff.utils.linalg import image_sum_dim, is_orthonormal, numeric_rank


def _generic(Rn: CurvatureTensor, vectors: Sequence, tol: float, nu: Optional[int]) -> bool:
    if not is_orthonormal(vectors):
        raise NotOrthonormal(f"genericity test needs {len(vectors)} orthonormal vectors")
    ops = [jacobi(Rn, v) for v in vectors]
    ranks = [numeric_rank(op, tol) for op in ops]
    if nu is not None and any(r != nu for r in ranks):
        return False
    if len(set(ranks)) != 1:
        return False
    return image_sum_dim(ops, tol) == sum(ranks)


def generic_pair(Rn: CurvatureTensor, X, Y, tol: float = 1e-8, nu: Optional[int] = None) -> bool:
    """
    Im R_X ∩ Im R_Y = 0, i.e. the two images span 2ν dimensions.

    Args:
        Rn (CurvatureTensor): normalized Osserman tensor.
        X, Y (array_like): orthonormal vectors.
        tol (float): relative rank cutoff.
        nu (int, optional): expected rank of each Jacobi operator; inferred when omitted.

    Raises:
        NotOrthonormal: if X, Y are not orthonormal.
    """
    return _generic(Rn, [X, Y], tol, nu)


def generic_triple(Rn: CurvatureTensor, X, Y, Z, tol: float = 1e-8, nu: Optional[int] = None) -> bool:
    """The three Jacobi images span 3ν dimensions (needs n ≥ 3ν to be possible)."""
    return _generic(Rn, [X, Y, Z], tol, nu)


def sample_triples(n: int, count: int, rng: np.random.Generator):
    """``count`` index triples of distinct basis vectors."""
    return [tuple(rng.choice(n, size=3, replace=False)) for _ in range(count)]
