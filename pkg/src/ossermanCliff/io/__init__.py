from .documents import SCHEMA_VERSION, load_schema, validate_document, read_document, write_document
from .tensor_io import TensorIO
from .clifford_io import CliffordIO
from .report_io import ReportIO, TraceIO
from .data_io_manager import DataIOManager
