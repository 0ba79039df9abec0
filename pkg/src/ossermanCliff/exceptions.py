"""Exception hierarchy for ossermanCliff.

Input errors also derive from ``ValueError`` so callers that only know the
built-in type keep working.
"""


class OssermanCliffError(Exception):
    """Root of every error raised by the package."""


# numkernel

class NonSymmetric(OssermanCliffError, ValueError):
    pass


class NonFinite(OssermanCliffError, ValueError):
    pass


class AmbiguousClustering(OssermanCliffError, ValueError):
    """Two eigenvalue clusters are too close to separate at the requested tolerance."""


# shapes

class ShapeMismatch(OssermanCliffError, ValueError):
    pass


class DimensionMismatch(OssermanCliffError, ValueError):
    pass


class NotUnit(OssermanCliffError, ValueError):
    pass


class TensorValidationError(OssermanCliffError, ValueError):
    """A tensor failed its symmetry checks."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# clifford

class ExceedsRadonBound(OssermanCliffError, ValueError):
    pass


class InvalidMu(OssermanCliffError, ValueError):
    pass


class InvalidSystem(OssermanCliffError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# io

class DocumentError(OssermanCliffError, ValueError):
    pass


# recovery

class RecoveryError(OssermanCliffError):
    """Base class of recovery failures; ``stage`` names the pipeline stage."""

    default_stage = None

    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage or self.default_stage

    def __str__(self):
        base = super().__str__()
        return f"[{self.stage}] {base}" if self.stage else base


class NotOsserman(RecoveryError):
    default_stage = "verify"


class HypothesesViolated(RecoveryError):
    default_stage = "hypotheses"


class TieBreakNeeded(RecoveryError):
    default_stage = "normalize"


class SpectrumMismatch(RecoveryError):
    default_stage = "frame"


class NotOrthonormal(RecoveryError, ValueError):
    default_stage = "frame"


class AlignmentFailed(RecoveryError):
    default_stage = "frame"


class GenericityExhausted(RecoveryError):
    default_stage = "frame"


class FrameInconsistent(RecoveryError):
    default_stage = "frame"


class UnstableSubspace(RecoveryError):
    default_stage = "subspace"


class GaugeFailed(RecoveryError):
    default_stage = "gauge"


class PeelInconsistent(RecoveryError):
    default_stage = "peel"


class ReconstructionFailed(RecoveryError):
    default_stage = "output"


class ObstructionDetected(RecoveryError):
    """Recovery failed on every attempt outside the structural hypotheses."""
