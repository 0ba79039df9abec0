import numpy as np
from scipy.stats import ortho_group


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator; every sampling step in the package draws from one of these."""
    return np.random.Generator(np.random.PCG64(seed))


def random_unit_vector(n: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(n)
    return v / np.linalg.norm(v)


def random_unit_vectors(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` uniform points of the unit sphere in ℝⁿ, one per row."""
    V = rng.standard_normal((count, n))
    return V / np.linalg.norm(V, axis=1, keepdims=True)


def random_orthonormal_basis(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random orthogonal matrix; its columns are the basis vectors."""
    if n == 1:
        return np.array([[1.0 if rng.random() < 0.5 else -1.0]])
    return ortho_group.rvs(dim=n, random_state=rng)
