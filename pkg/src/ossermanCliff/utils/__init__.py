from .linalg import *
from .spectrum import SpectrumProfile, cluster_spectrum
from .sampling import make_rng, random_unit_vector, random_unit_vectors, random_orthonormal_basis
