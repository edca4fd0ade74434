"""Zonal spherical functions restricted to the torus, their radial equation, norms and series oracle."""
from .cases import MAX_RANK, CaseConfig, duplicate_partition, radial_eigenvalue, weight_eigenvalue
from .norms import (
    MAX_NORM_SIZE, NORM_MUTATIONS, bialternant_value, c_lambda, c_lambda_at_rho, c_lambda_product, d_lambda,
    d_lambda_product, norm_table_row, ratio_product, verify_norm_identity,
)
from .rank_one import RANK_ONE_MUTATIONS, NoSolution, closed_form, rank_one_fixed_vector, verify_rank_one
from .restriction import RADIAL_MUTATIONS, radial_operator, verify_radial_eigen, zonal_restriction
from .series import (
    DEFAULT_K, MAX_K, SERIES_MUTATIONS, TruncationWarning, gram_schmidt_oracle, polynomial_series,
    rational_series, scalar_product_series, specialise, verify_gram_schmidt, verify_orthogonality,
    verify_series_norms, weight_series,
)
