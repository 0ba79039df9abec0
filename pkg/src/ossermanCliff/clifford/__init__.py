from .hurwitz import (
    radon_number, generate_hurwitz_family, complex_family, quaternion_family,
    octonion_family, double_family, periodicity_step
)
from .system import CliffordSystem, CliffordValidation, validate_clifford
from .builders import (
    curvature_from_clifford, clifford_jacobi, clifford_profile, clifford_system_from_family
)
