import logging

import numpy as np
from tqdm import tqdm

from ossermanCliff.clifford.hurwitz import radon_number
from ossermanCliff.curvature.jacobi import restricted_eigenvalues
from ossermanCliff.curvature.tensor import VALIDATION_TOL, CurvatureTensor, validate_tensor
from ossermanCliff.exceptions import TensorValidationError
from ossermanCliff.osserman.report import OssermanReport, classify, prop1_hypotheses
from ossermanCliff.utils.sampling import make_rng, random_unit_vectors
from ossermanCliff.utils.spectrum import cluster_spectrum

logger = logging.getLogger(__name__)


def sampled_spectra(R: CurvatureTensor, samples: int, seed: int, progress: bool = False) -> np.ndarray:
    """Sorted restricted Jacobi spectra at ``samples`` seeded unit vectors, one row per vector."""
    X = random_unit_vectors(R.n, samples, make_rng(seed))
    spectra = np.empty((samples, R.n - 1))
    for t in tqdm(range(samples), desc="jacobi spectra", disable=not progress, leave=False):
        spectra[t] = restricted_eigenvalues(R, X[t])
    return spectra


def osserman_check(R: CurvatureTensor, samples: int = 200, rel_tol: float = 1e-9,
                   seed: int = 0, progress: bool = False,
                   symmetry_tol: float = VALIDATION_TOL) -> OssermanReport:
    """
    Sample the Jacobi spectrum over the unit sphere and compare.

    The sorted spectra (with multiplicity) of all samples are compared index
    by index; the largest spread is the reported deviation.

    Args:
        R (CurvatureTensor): tensor to test; its symmetries are validated first.
        samples (int): number of unit vectors, at least 2.
        rel_tol (float): agreement and clustering tolerance relative to the spectral scale.
        seed (int): PCG64 seed.
        progress (bool): show a progress bar.
        symmetry_tol (float): absolute bound on the symmetry residuals.

    Returns:
        OssermanReport
    """
    if samples < 2:
        raise ValueError("osserman_check needs at least 2 samples")
    validation = validate_tensor(R, symmetry_tol)
    if not validation.passed:
        raise TensorValidationError(f"tensor fails symmetry checks {validation.failing()}", validation)

    n = R.n
    spectra = sampled_spectra(R, samples, seed, progress)
    if n > 1:
        max_deviation = float(np.max(spectra.max(axis=0) - spectra.min(axis=0)))
        scale = max(1.0, float(np.max(np.abs(spectra))))
    else:
        max_deviation, scale = 0.0, 1.0
    is_osserman = max_deviation <= rel_tol * scale

    profile = cluster_spectrum(spectra.mean(axis=0) if is_osserman else spectra[0], rel_tol)
    m0 = profile.max_multiplicity
    nu = n - 1 - m0
    report = OssermanReport(
        is_osserman=bool(is_osserman),
        profile=profile,
        max_deviation=max_deviation,
        samples_used=samples,
        m0=m0,
        nu=nu,
        prop1_hypotheses=prop1_hypotheses(n, nu),
        radon_bound_ok=nu <= radon_number(n) - 1,
        prop2_class=classify(n, nu),
    )
    logger.info("osserman_check n=%d: osserman=%s deviation=%.3e profile=%s",
                n, report.is_osserman, max_deviation, profile)
    if is_osserman and not report.radon_bound_ok:
        logger.warning("ν=%d exceeds ρ(%d) − 1; the spectrum is probably mis-clustered", nu, n)
    return report
