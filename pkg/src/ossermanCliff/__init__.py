from .curvature import *
from .clifford import *
from .osserman import *
from .recovery import *
from .cayley import *
from .config import Tolerances, RecoveryConfig, RunConfig
from .io import DataIOManager
from .pipeline import RecoveryTrace, recover_clifford
from .utils import SpectrumProfile, cluster_spectrum
