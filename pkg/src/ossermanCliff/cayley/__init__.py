from .octonion import (
    Octonion, oct_mul, oct_conj, quat_mul, quat_conj,
    left_multiplication_matrix, right_multiplication_matrix
)
from .plane import (
    CayleyPoint, cayley_jacobi, cayley_jacobi_quadratic, cayley_tensor,
    e_alpha_conditions, e_quarter_conditions, e_alpha_membership, e_quarter_membership
)
from .obstruction import (
    Eigenspace, section_nullspace, clifford_eigenspace_conditions, obstruction_nullspace
)
