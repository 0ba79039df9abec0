"""
Radon–Hurwitz numbers and explicit Hurwitz families.

A Hurwitz family on ℝⁿ is a list of skew-symmetric orthogonal matrices with
J_s J_q + J_q J_s = −2δ_sq I. For n = 2^(4a+b)·c (c odd, 0 ≤ b ≤ 3) the largest
family has ρ(n) − 1 = 2^b + 8a − 1 members. The construction here starts from
the complex, quaternion or octonion family on ℝ^(2^b), applies the 16-fold
periodicity step a times and replicates the result block-diagonally c times.
"""
import logging
from typing import List

import numpy as np

from ossermanCliff.cayley.octonion import left_multiplication_matrix, quat_mul
from ossermanCliff.exceptions import ExceedsRadonBound

logger = logging.getLogger(__name__)

_EPS = np.array([[0.0, -1.0], [1.0, 0.0]])
_SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])


def _two_adic(n: int) -> int:
    return (n & -n).bit_length() - 1


def radon_number(n: int) -> int:
    """ρ(n) = 2^b + 8a for n = 2^(4a+b)·c with c odd and 0 ≤ b ≤ 3."""
    if n < 1:
        raise ValueError("radon_number needs n >= 1")
    a, b = divmod(_two_adic(n), 4)
    return 2 ** b + 8 * a


def complex_family() -> List[np.ndarray]:
    return [_EPS.copy()]


def quaternion_family() -> List[np.ndarray]:
    """Left multiplication by i, j, k on ℍ ≅ ℝ⁴."""
    E = np.eye(4)
    return [np.column_stack([quat_mul(E[u], E[k]) for k in range(4)]) for u in (1, 2, 3)]


def octonion_family() -> List[np.ndarray]:
    """Left multiplication by e1, ..., e7 on 𝕆 ≅ ℝ⁸."""
    E = np.eye(8)
    return [left_multiplication_matrix(E[u]) for u in range(1, 8)]


def double_family(family: List[np.ndarray], dim: int) -> List[np.ndarray]:
    """s generators on ℝ^d → s + 1 generators on ℝ^(2d)."""
    doubled = [np.kron(_SIGMA_Z, A) for A in family]
    doubled.append(np.kron(_EPS, np.eye(dim)))
    return doubled


def _sixteen_family() -> List[np.ndarray]:
    return double_family(octonion_family(), 8)


def periodicity_step(family: List[np.ndarray], dim: int) -> List[np.ndarray]:
    """
    s generators on ℝ^d → s + 8 generators on ℝ^(16d).

    Uses the eight generators F_i on ℝ¹⁶ and their product ω = F_1⋯F_8, which
    is symmetric, squares to I and anticommutes with every F_i.
    """
    F = _sixteen_family()
    omega = np.linalg.multi_dot(F)
    extended = [np.kron(np.eye(dim), Fi) for Fi in F]
    extended.extend(np.kron(A, omega) for A in family)
    return extended


_BASE = {
    0: (lambda: [], 1),
    1: (complex_family, 2),
    2: (quaternion_family, 4),
    3: (octonion_family, 8),
}


def generate_hurwitz_family(n: int, nu: int) -> List[np.ndarray]:
    """
    Build ν anticommuting skew-symmetric orthogonal n×n matrices.

    Args:
        n (int): dimension.
        nu (int): family size, 0 ≤ ν ≤ ρ(n) − 1.

    Returns:
        list of np.ndarray: the generators J_1, ..., J_ν.

    Raises:
        ExceedsRadonBound: if ν > ρ(n) − 1.
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    if nu < 0:
        raise ValueError("family size must be non-negative")
    rho = radon_number(n)
    if nu > rho - 1:
        raise ExceedsRadonBound(f"ν={nu} exceeds ρ({n}) − 1 = {rho - 1}")
    if nu == 0:
        return []

    k = _two_adic(n)
    a, b = divmod(k, 4)
    odd = n >> k
    builder, dim = _BASE[b]
    family = builder()
    for _ in range(a):
        family = periodicity_step(family, dim)
        dim *= 16
    if odd > 1:
        family = [np.kron(np.eye(odd), A) for A in family]
    logger.debug("Hurwitz family for n=%d: %d generators built, %d kept", n, len(family), nu)
    return family[:nu]
