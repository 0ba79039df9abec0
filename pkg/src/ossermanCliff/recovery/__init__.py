from .gauge import LambdaOp, normalize, factor_jacobi
from .genericity import generic_pair, generic_triple
from .frame import FactorFrame, align_pair, assemble_frame, frame_residual, sampled_jacobi_residual
from .phi import (
    PhiValue, phi, phi_spectrum, phi_semidefinite_gap, select_target_eigenvalue,
    stable_subspace, o_lambda_factor, gauge_generators
)
from .peel import peel, reduce_frame
