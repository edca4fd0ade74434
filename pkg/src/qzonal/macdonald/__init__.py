"""Partitions, symmetric polynomials and Macdonald polynomials by triangular eigen-solve."""
from .formulas import (
    FormulaMismatch, hall_littlewood_row, hook_content_value, jacobi_trudi_value, norm_ratio_formula,
    principal_specialization_formula, schur_d, schur_polynomial,
)
from .operator import SingularDiagonal, apply_D1, d1_matrix, eigenvalue, macdonald_p, triangularity_defect
from .partitions import (
    Partition, dominance_leq, dominance_less, parse_partition, partitions_of, partitions_up_to,
)
from .symmetric import NotSymmetric, SymmetricPolynomial, monomial_exponents, x_names
