import numpy as np

from ossermanCliff.clifford.system import CliffordSystem, validate_clifford
from ossermanCliff.exceptions import DocumentError, InvalidSystem
from ossermanCliff.io.documents import new_document, read_document, write_document

KIND = "clifford_system"


class CliffordIO:
    @staticmethod
    def to_document(C: CliffordSystem) -> dict:
        return new_document(KIND, n=C.n, nu=C.nu, lambda0=C.lambda0,
                            mu=C.mu.tolist(), J=C.J.tolist())

    @staticmethod
    def from_document(data: dict, tol: float = None) -> CliffordSystem:
        n, nu = data["n"], data["nu"]
        if len(data["mu"]) != nu or len(data["J"]) != nu:
            raise DocumentError(f"system document declares ν={nu} but lists "
                                f"{len(data['mu'])} eigenvalues and {len(data['J'])} generators")
        J = np.array(data["J"], dtype=float) if nu else np.zeros((0, n, n))
        C = CliffordSystem(n, data["lambda0"], data["mu"], J)
        report = validate_clifford(C, tol=tol)
        if not report.passed:
            raise InvalidSystem(f"Clifford system fails {report.failing()}", report)
        return C

    @staticmethod
    def read(filename, tol: float = None) -> CliffordSystem:
        return CliffordIO.from_document(read_document(filename, KIND), tol)

    @staticmethod
    def write(filename, C: CliffordSystem):
        return write_document(filename, CliffordIO.to_document(C))
