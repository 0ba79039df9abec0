from ossermanCliff.curvature.tensor import CurvatureTensor, validate_tensor
from ossermanCliff.exceptions import DocumentError, TensorValidationError
from ossermanCliff.io.documents import new_document, read_document, write_document

KIND = "curvature_tensor"


class TensorIO:
    @staticmethod
    def to_document(R: CurvatureTensor) -> dict:
        return new_document(KIND, n=R.n, comps=R.flat.tolist())

    @staticmethod
    def from_document(data: dict, tol: float = 1e-10) -> CurvatureTensor:
        n, comps = data["n"], data["comps"]
        if len(comps) != n ** 4:
            raise DocumentError(f"tensor document holds {len(comps)} components, expected {n ** 4}")
        R = CurvatureTensor(comps, n)
        report = validate_tensor(R, tol)
        if not report.passed:
            raise TensorValidationError(f"tensor fails symmetry checks {report.failing()}", report)
        return R

    @staticmethod
    def read(filename, tol: float = 1e-10) -> CurvatureTensor:
        return TensorIO.from_document(read_document(filename, KIND), tol)

    @staticmethod
    def write(filename, R: CurvatureTensor):
        return write_document(filename, TensorIO.to_document(R))
