import pytest
import numpy as np

from ossermanCliff.clifford import clifford_system_from_family, curvature_from_clifford
from ossermanCliff.curvature import CurvatureTensor, sphere_tensor


def block_sphere_tensor(k: int = 3, curvatures=(1.0, 2.0)) -> CurvatureTensor:
    """Direct sum of scaled sphere tensors on ℝᵏ ⊕ ℝᵏ (symmetric, not Osserman)."""
    n = 2 * k
    comps = np.zeros((n, n, n, n))
    S = sphere_tensor(k).comps
    for b, c in enumerate(curvatures):
        sl = slice(b * k, (b + 1) * k)
        comps[sl, sl, sl, sl] = c * S
    return CurvatureTensor(comps)


@pytest.fixture
def rng():
    return np.random.default_rng(seed=42)


@pytest.fixture
def sphere5():
    return sphere_tensor(5)


@pytest.fixture
def block_tensor():
    return block_sphere_tensor()


@pytest.fixture
def cliff2_r8():
    """Cliff(2) on ℝ⁸ with λ₀ = 1, μ = (3, 5), rotated off the coordinate axes."""
    return clifford_system_from_family(8, 1.0, [3.0, 5.0], seed=7)


@pytest.fixture
def cliff2_r8_tensor(cliff2_r8):
    return curvature_from_clifford(cliff2_r8)


@pytest.fixture
def cliff3_r12():
    """Cliff(3) on ℝ¹² with λ₀ = 0.5, μ = (1.5, 1.5, 3)."""
    return clifford_system_from_family(12, 0.5, [1.5, 1.5, 3.0], seed=11)


@pytest.fixture
def cliff3_r12_tensor(cliff3_r12):
    return curvature_from_clifford(cliff3_r12)
