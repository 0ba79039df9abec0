from typing import Callable

import numpy as np

from ossermanCliff.curvature.tensor import CurvatureTensor


def tensor_from_jacobi(jacobi_fn: Callable[[np.ndarray], np.ndarray], n: int) -> CurvatureTensor:
    """
    Rebuild a curvature tensor from its Jacobi operators.

    The mixed operators follow from polarization,
    R_{XY} = ½(R_{X+Y} − R_X − R_Y), and the first Bianchi identity gives
    R(X,Z)Y = (2/3)(R_{XY}Z − R_{ZY}X).

    Args:
        jacobi_fn: maps any vector X (not necessarily unit) to the n×n matrix of R_X.
        n (int): dimension.

    Returns:
        CurvatureTensor: the unique tensor with those Jacobi operators, provided
        ``jacobi_fn`` comes from an algebraic curvature tensor.
    """
    E = np.eye(n)
    diag = [np.asarray(jacobi_fn(E[a]), dtype=float) for a in range(n)]
    T = np.empty((n, n, n, n))
    for a in range(n):
        T[a, a] = diag[a]
        for b in range(a + 1, n):
            mixed = 0.5 * (np.asarray(jacobi_fn(E[a] + E[b]), dtype=float) - diag[a] - diag[b])
            T[a, b] = mixed
            T[b, a] = mixed
    # T[a, b, l, m] = ⟨R_{e_a e_b} e_m, e_l⟩
    comps = (2.0 / 3.0) * (np.einsum("iklj->ijkl", T) - np.einsum("jkli->ijkl", T))
    return CurvatureTensor(comps)
