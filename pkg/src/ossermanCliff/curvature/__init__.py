from .tensor import CurvatureTensor, TensorValidation, validate_tensor, sphere_tensor, combine
from .jacobi import (
    curvature_action, jacobi, mixed_jacobi, jacobi_spectrum, restricted_eigenvalues, require_unit
)
from .polarization import tensor_from_jacobi
