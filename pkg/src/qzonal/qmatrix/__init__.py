"""Exact matrices: R-matrices, reflection equation, vector representation, triangular calculus."""
from .fmatrix import FMatrix
from .projections import PROJECTION_MUTATIONS, iota_pi, reduced_operator, twisted_r, verify_projections
from .rmatrix import (
    REFLECTION_MUTATIONS, YBE_MUTATIONS, case_dimension, flip, j_matrix, leg_embed, normalize_case,
    r_matrix, swap_legs, verify_reflection, verify_ybe,
)
from .triangular import (
    TRIANGULAR_MUTATIONS, CollidingPoints, a_inverse, a_matrix, a_x_matrix, f_matrix, g_matrices,
    one_row_symbol, verify_triangular,
)
from .vector_rep import GK_MUTATIONS, VECTOR_REP_MUTATIONS, theta, vector_rep, verify_gk_relations, verify_vector_rep
