# src/ossermanCliff/pipeline.py

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd

from ossermanCliff.clifford.builders import curvature_from_clifford
from ossermanCliff.clifford.system import CliffordSystem, validate_clifford
from ossermanCliff.config import RecoveryConfig
from ossermanCliff.curvature.tensor import CurvatureTensor
from ossermanCliff.exceptions import (
    AlignmentFailed, AmbiguousClustering, FrameInconsistent, GaugeFailed, GenericityExhausted,
    HypothesesViolated, InvalidSystem, NotOrthonormal, NotOsserman, ObstructionDetected,
    PeelInconsistent, ReconstructionFailed, RecoveryError, SpectrumMismatch, UnstableSubspace
)
from ossermanCliff.osserman.check import osserman_check
from ossermanCliff.recovery.frame import assemble_frame, frame_residual
from ossermanCliff.recovery.gauge import LambdaOp, normalize
from ossermanCliff.recovery.peel import peel, reduce_frame
from ossermanCliff.recovery.phi import gauge_generators, select_target_eigenvalue, stable_subspace
from ossermanCliff.utils.sampling import make_rng, random_unit_vector

logger = logging.getLogger(__name__)

RETRYABLE = (
    SpectrumMismatch, NotOrthonormal, AlignmentFailed, GenericityExhausted, FrameInconsistent,
    UnstableSubspace, GaugeFailed, PeelInconsistent, ReconstructionFailed,
)
# seed stride between attempts
SEED_STRIDE = 7919


@dataclass(frozen=True)
class StageRecord:
    stage: str
    residual: float
    detail: str = ""


@dataclass
class RecoveryTrace:
    """Per-stage residuals of one recovery run, in execution order."""
    stages: List[StageRecord] = field(default_factory=list)

    def add(self, stage: str, residual: float, detail: str = "") -> None:
        self.stages.append(StageRecord(stage, float(residual), detail))
        logger.info("stage %-10s residual %.3e %s", stage, residual, detail)

    def to_dict(self) -> dict:
        return {"stages": [{"stage": s.stage, "residual": s.residual, "detail": s.detail}
                           for s in self.stages]}

    @classmethod
    def from_dict(cls, data: dict) -> "RecoveryTrace":
        return cls([StageRecord(d["stage"], float(d["residual"]), d.get("detail", ""))
                    for d in data["stages"]])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([s.__dict__ for s in self.stages], columns=["stage", "residual", "detail"])


def _staged(err: RecoveryError, stage: str) -> RecoveryError:
    err.stage = stage
    return err


def _peel_generators(Rn: CurvatureTensor, lam: LambdaOp, config: RecoveryConfig,
                     trace: RecoveryTrace) -> List[Tuple[float, List[np.ndarray]]]:
    """Frame assembly followed by the peeling loop; returns (λ_α, generators) per round."""
    tols = config.tolerances
    rng = make_rng(config.seed + 1)
    try:
        frame = assemble_frame(Rn, lam, config)
    except RecoveryError as err:
        raise _staged(err, "frame")
    trace.add("frame", frame.residuals["pairwise"],
              f"draws={frame.residuals['draws']} sampled={frame.residuals['sampled_jacobi']:.3e}")

    rounds = []
    remainder = Rn
    while frame.nu > 0:
        current = frame.lambda_op
        lambda_alpha, m_alpha = select_target_eigenvalue(current)
        try:
            S = stable_subspace(frame, current, config.subspace_samples, tols.angle,
                                int(rng.integers(2 ** 31)), tols.frame)
        except RecoveryError as err:
            raise _staged(err, "subspace")
        trace.add("subspace", 0.0, f"lambda_alpha={lambda_alpha:.12g} dim={m_alpha}")

        X0 = random_unit_vector(Rn.n, rng)
        try:
            J_list = gauge_generators(frame, S, X0, current, tols.frame,
                                      config.check_samples, int(rng.integers(2 ** 31)))
        except RecoveryError as err:
            raise _staged(err, "gauge")
        trace.add("gauge", 0.0, f"generators={len(J_list)}")

        try:
            remainder = peel(remainder, lambda_alpha, J_list, tols.frame,
                             seed=int(rng.integers(2 ** 31)))
            frame = reduce_frame(frame, X0, lambda_alpha, tols.frame)
        except RecoveryError as err:
            raise _staged(err, "peel")
        residual = frame_residual(frame, remainder) if frame.nu else remainder.norm
        if residual > tols.frame * max(1.0, lam.scale):
            raise PeelInconsistent(f"reduced frame misses the remainder by {residual:.3e}")
        trace.add("peel", residual, f"remaining_nu={frame.nu}")
        rounds.append((lambda_alpha, J_list))
    return rounds


def recover_clifford(R: CurvatureTensor, config: Optional[RecoveryConfig] = None,
                     trace: Optional[RecoveryTrace] = None, progress: bool = False) -> CliffordSystem:
    """
    Recover a Clifford structure from an Osserman tensor:
    1. Verify the Osserman property and read off the spectrum
    2. Check the dimension hypotheses n ≥ 3ν and 4n > (ν+1)²
    3. Normalize by the eigenvalue of maximal multiplicity
    4. Assemble the factor frame X ↦ M_X
    5. Peel eigenvalue groups one at a time: stable subspace, generators, remainder
    6. Rebuild the tensor from the collected system and compare with the input

    Args:
        R (CurvatureTensor): input tensor.
        config (RecoveryConfig, optional): sampling, tolerances, retries and ``force``.
        trace (RecoveryTrace, optional): filled with one record per stage.
        progress (bool): show a progress bar over the verification samples.

    Returns:
        CliffordSystem: a system whose tensor reproduces R.

    Raises:
        NotOsserman, HypothesesViolated, TieBreakNeeded, ObstructionDetected and
        the stage errors of the recovery package, each with ``stage`` set.
    """
    config = config or RecoveryConfig()
    trace = trace if trace is not None else RecoveryTrace()
    tols = config.tolerances
    n = R.n

    # Step 1: verify
    try:
        report = osserman_check(R, config.samples, tols.cluster, config.seed,
                                progress=progress, symmetry_tol=tols.symmetry)
    except AmbiguousClustering as err:
        raise NotOsserman(f"spectrum cannot be clustered: {err}") from err
    if not report.is_osserman:
        raise NotOsserman(f"Jacobi spectrum varies by {report.max_deviation:.3e}")
    trace.add("verify", report.max_deviation, f"profile={report.profile}")

    # Step 2: hypotheses
    if not report.hypotheses_hold:
        message = f"n={n}, ν={report.nu} violates n ≥ 3ν or 4n > (ν+1)²"
        if not config.force:
            raise HypothesesViolated(message)
        logger.warning("%s; continuing because force is set", message)
    trace.add("hypotheses", 0.0, f"nu={report.nu} hold={report.hypotheses_hold}")

    # Step 3: normalize
    Rn, lambda0, lam = normalize(R, report.profile, tols.cluster)
    trace.add("normalize", 0.0, f"lambda0={lambda0:.12g} Lambda={list(lam.mu)}")

    # Steps 4-6, retried with fresh seeds
    last_error = None
    for attempt in range(config.retries + 1):
        attempt_config = config.with_overrides(seed=config.seed + attempt * SEED_STRIDE)
        try:
            rounds = _peel_generators(Rn, lam, attempt_config, trace) if lam.nu else []
            system, residual = _assemble_output(R, lambda0, rounds, tols)
        except RETRYABLE as err:
            last_error = err
            logger.warning("attempt %d failed: %s", attempt + 1, err)
            continue
        trace.add("output", residual, f"nu={system.nu}")
        return system

    if config.force and not report.hypotheses_hold:
        raise ObstructionDetected(
            f"no Clifford structure after {config.retries + 1} attempts: {last_error}",
            stage=last_error.stage,
        ) from last_error
    raise last_error


def _assemble_output(R: CurvatureTensor, lambda0: float, rounds, tols) -> Tuple[CliffordSystem, float]:
    mu = [lambda0 + lambda_alpha for lambda_alpha, J_list in rounds for _ in J_list]
    J = [Js for _, J_list in rounds for Js in J_list]
    system = CliffordSystem(R.n, lambda0, mu, J)
    report = validate_clifford(system, tol=tols.frame)
    if not report.passed:
        raise ReconstructionFailed(f"recovered generators fail {report.failing()}")
    try:
        rebuilt = curvature_from_clifford(system, tol=tols.frame)
    except InvalidSystem as err:
        raise ReconstructionFailed(str(err)) from err
    residual = float(np.max(np.abs(rebuilt.comps - R.comps)))
    scale = max(1.0, R.norm)
    if residual > tols.reconstruction * scale:
        raise ReconstructionFailed(f"rebuilt tensor differs from the input by {residual:.3e}")
    return system, residual
