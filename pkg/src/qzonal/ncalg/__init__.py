"""Quantum matrix algebra A_q(Mat(N)) by normal ordering, and checks built on it."""
from .algebra import (
    STRAIGHTEN_MUTATIONS, NCPolynomial, QuantumMatrixAlgebra, nc_mul, quantum_matrix_algebra,
)
from .checks import (
    algebra_for, associativity_fuzz, centrality_check, phi_fundamental, quantum_pfaffian_check,
    restrict_to_torus, verify_phi_restrictions, verify_rtt, verify_x_relations, x_entries,
)
