"""m-isometric weighted shifts with matrix weights.

Build positive weights from a matrix polynomial, verify the m-isometry
identity block by block, complete finite weight prefixes, and test the
commutativity and adjoint criteria.
"""
from .analyze import (adjoint_is_m_isometric, coefficient_structure_check, coefficients_commute,
                      commutativity_equivalence_check, weights_commute)
from .completion import can_start_2isometry, complete_weights, completion_polynomial, lagrange_basis
from .construct import ConstructionResult, construct_bilateral, construct_unilateral
from .errors import *  # noqa: F401,F403
from .matcore import (commutator_norm, eig_hermitian, inverse, is_positive_definite,
                      pencil_spectral_radius, psd_sqrt, spectral_radius, trace)
from .oppoly import (MatrixPolynomial, check_preconditions, evaluate, fit_from_values,
                     invert_in_degree, multiply)
from .shiftcore import (IsometryReport, WeightSequence, adjoint_flip, beta_block, gram,
                        scalar_compression, shift_norm, verify_m_isometry)

__version__ = "0.1.0"
