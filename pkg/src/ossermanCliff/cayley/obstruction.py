import logging
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from ossermanCliff.cayley.plane import DIM, e_alpha_conditions, e_quarter_conditions
from ossermanCliff.utils.linalg import numeric_rank
from ossermanCliff.utils.sampling import make_rng, random_unit_vectors

logger = logging.getLogger(__name__)

MIN_SAMPLES = 32


class Eigenspace(str, Enum):
    ALPHA = "alpha"
    ALPHA_QUARTER = "alpha4"


def section_nullspace(conditions: Callable[[np.ndarray], np.ndarray], n: int,
                      samples: int = 64, tol: float = 1e-8, seed: int = 0) -> int:
    """
    Dimension of the space of n×n matrices J with conditions(X) @ (J X) = 0 at sampled X.

    With J flattened row-major, J X = (I_n ⊗ Xᵗ) vec(J); the per-sample blocks
    are stacked and the numerical nullspace of the stack is measured.

    Args:
        conditions: maps a unit vector X to a k×n matrix whose kernel is the
            admissible set for J X.
        n (int): ambient dimension.
        samples (int): number of random unit X.
        tol (float): relative singular-value cutoff.
        seed (int): PCG64 seed.

    Returns:
        int: n² − rank of the constraint system.
    """
    X = random_unit_vectors(n, samples, make_rng(seed))
    blocks = [np.asarray(conditions(x)) @ np.kron(np.eye(n), x[None, :]) for x in X]
    system = np.vstack(blocks)
    dim = n * n - numeric_rank(system, tol)
    logger.debug("section_nullspace: %d×%d system, nullspace %d", *system.shape, dim)
    return dim


def clifford_eigenspace_conditions(J: Sequence[np.ndarray]) -> Callable[[np.ndarray], np.ndarray]:
    """Conditions I − Σ (J_sX)(J_sX)ᵗ: J X must lie in span(J_1X, ..., J_νX)."""
    J = [np.asarray(Js, dtype=float) for Js in J]

    def conditions(X: np.ndarray) -> np.ndarray:
        V = np.column_stack([Js @ X for Js in J])
        return np.eye(X.shape[0]) - V @ V.T

    return conditions


def obstruction_nullspace(which: Eigenspace, samples: int = 64, tol: float = 1e-8, seed: int = 0) -> int:
    """
    Count the linear operators J on ℝ¹⁶ with J X ∈ E(X) for every sampled unit X,
    where E is the α or α/4 eigenspace of the Cayley plane. Zero means no
    nonzero linear section exists, hence no Clifford structure.
    """
    if samples < MIN_SAMPLES:
        raise ValueError(f"obstruction_nullspace needs at least {MIN_SAMPLES} samples, got {samples}")
    which = Eigenspace(which)
    conditions = e_alpha_conditions if which is Eigenspace.ALPHA else e_quarter_conditions
    dim = section_nullspace(conditions, DIM, samples, tol, seed)
    logger.info("obstruction (%s): nullspace dimension %d over %d samples", which.value, dim, samples)
    return dim
