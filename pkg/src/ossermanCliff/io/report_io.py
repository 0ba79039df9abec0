from typing import Optional, Tuple

from ossermanCliff.exceptions import RecoveryError
from ossermanCliff.io.documents import new_document, read_document, write_document
from ossermanCliff.osserman.duality import DualityReport
from ossermanCliff.osserman.report import OssermanReport
from ossermanCliff.pipeline import RecoveryTrace


class ReportIO:
    KIND = "osserman_report"

    @staticmethod
    def to_document(report: OssermanReport, duality: Optional[DualityReport] = None,
                    sixteen: Optional[bool] = None) -> dict:
        return new_document(ReportIO.KIND, **report.to_dict(),
                            sixteen_dimensional_criterion=sixteen,
                            duality=duality.to_dict() if duality is not None else None)

    @staticmethod
    def read(filename) -> Tuple[OssermanReport, Optional[dict]]:
        """Report plus the raw duality sub-document (None when absent)."""
        data = read_document(filename, ReportIO.KIND)
        return OssermanReport.from_dict(data), data.get("duality")

    @staticmethod
    def write(filename, report: OssermanReport, duality: Optional[DualityReport] = None,
              sixteen: Optional[bool] = None):
        return write_document(filename, ReportIO.to_document(report, duality, sixteen))


class TraceIO:
    KIND = "recovery_trace"

    @staticmethod
    def to_document(trace: RecoveryTrace, error: Optional[Exception] = None) -> dict:
        err = None
        if error is not None:
            err = {
                "type": type(error).__name__,
                "stage": getattr(error, "stage", None) if isinstance(error, RecoveryError) else None,
                "message": str(error),
            }
        return new_document(TraceIO.KIND, **trace.to_dict(), error=err)

    @staticmethod
    def read(filename) -> RecoveryTrace:
        return RecoveryTrace.from_dict(read_document(filename, TraceIO.KIND))

    @staticmethod
    def write(filename, trace: RecoveryTrace, error: Optional[Exception] = None):
        return write_document(filename, TraceIO.to_document(trace, error))
