from ossermanCliff.io.clifford_io import CliffordIO
from ossermanCliff.io.report_io import ReportIO, TraceIO
from ossermanCliff.io.tensor_io import TensorIO


class DataIOManager:
    readers = {
        'curvature_tensor': TensorIO.read,
        'clifford_system': CliffordIO.read,
        'osserman_report': ReportIO.read,
        'recovery_trace': TraceIO.read,
    }
    writers = {
        'curvature_tensor': TensorIO.write,
        'clifford_system': CliffordIO.write,
        'osserman_report': ReportIO.write,
        'recovery_trace': TraceIO.write,
    }
    _kinds = list(readers.keys())

    @classmethod
    def read(cls, kind: str, filename, **kwargs):
        """
        Reads a document of the given kind.

        Args:
            kind (str): one of supported_kinds().
            filename (str or Path): path of the JSON document.
            **kwargs: passed to the kind's reader (e.g. ``tol``).

        Returns:
            The object built from the document.
        """
        if kind not in cls._kinds:
            raise KeyError(f"No reader registered for kind '{kind}'")
        return cls.readers[kind](filename, **kwargs)

    @classmethod
    def write(cls, kind: str, filename, obj, **kwargs):
        if kind not in cls._kinds:
            raise KeyError(f"No writer registered for kind '{kind}'")
        return cls.writers[kind](filename, obj, **kwargs)

    @classmethod
    def supported_kinds(cls):
        return cls._kinds
