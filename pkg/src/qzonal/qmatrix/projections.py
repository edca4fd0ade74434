"""Projection of the twisted R-matrix onto the diagonal subspace W.

R~ = (R^+)^t2 P J_2 H_1 J_1^-1 H_1 acts on V (x) V; iota_W: W -> V (x) V and
pi_W: V (x) V -> W pick out the diagonal pairs.  Both compositions reduce to
c A(t) D on W, with (c, t, D) = (q, q^2, diag h_k^2) in the orthogonal case
and (-q^2, q^4, diag h_{2k-1} h_{2k}) in the symplectic case.  H carries free
symbols h_1..h_N standing for q^<h, eps_k>.
"""
from __future__ import annotations

from ..report import Report, check_mutation
from .fmatrix import FMatrix
from .rmatrix import a_names, case_dimension, default_field, flip, j_matrix, normalize_case, r_matrix
from .triangular import a_matrix


def h_names(N):
    return tuple(f"h{k}" for k in range(1, N + 1))


def projection_field(case, n):
    return default_field(*a_names(n), *h_names(case_dimension(case, n)))


def twisted_r(case, n, field):
    N = case_dimension(case, n)
    I = FMatrix.identity(N, field)
    J = j_matrix(case, n, field)
    H = FMatrix.diag([field.gen(v) for v in h_names(N)], field)
    R = r_matrix(N, "+", field)
    H1 = H.kron(I)
    return R.partial_transpose(N, 2) * flip(N, field) * I.kron(J) * H1 * J.inverse().kron(I) * H1


def iota_pi(case, n, field):
    """(iota_W, pi_W) as N^2 x n and n x N^2 matrices."""
    case = normalize_case(case)
    N = case_dimension(case, n)
    q = field.gen("q")
    iota, pi = {}, {}
    for k in range(n):
        if case == "SO":
            iota[(k * N + k, k)] = 1
            pi[(k, k * N + k)] = 1
        else:
            a, b = 2 * k, 2 * k + 1
            iota[(a * N + a, k)] = 1
            iota[(b * N + b, k)] = 1
            pi[(k, a * N + a)] = q
            pi[(k, b * N + b)] = 1 / q
    return FMatrix(N * N, n, field, iota), FMatrix(n, N * N, field, pi)


def reduced_operator(case, n, field, drop_q=False):
    """c A(t) D on W."""
    case = normalize_case(case)
    q = field.gen("q")
    h = [field.gen(v) for v in h_names(case_dimension(case, n))]
    if case == "SO":
        c, t = q, q**2
        D = [hk * hk for hk in h]
    else:
        c, t = -q * q, q**4
        D = [h[2 * k] * h[2 * k + 1] for k in range(n)]
    if drop_q:
        c = c / q
    return (a_matrix(n, t, field) * FMatrix.diag(D, field)).scale(c)


def transposed_flip_expansion(N, field):
    """sum_ij q^delta_ij e_ij (x) e_ji + (q - q^-1) sum_{i<j} e_ij (x) e_ij."""
    q = field.gen("q")
    entries = {}
    for i in range(N):
        for j in range(N):
            entries[(i * N + j, j * N + i)] = q if i == j else 1
            if i < j:
                entries[(i * N + i, j * N + j)] = q - 1 / q
    return FMatrix(N * N, N * N, field, entries)


# drop-q: remove one factor of q from the scalar on the right-hand side.
PROJECTION_MUTATIONS = {"drop-q"}


def verify_projections(case, n, mutation=None):
    check_mutation(mutation, PROJECTION_MUTATIONS)
    case = normalize_case(case)
    limit = 3 if case == "SO" else 2
    if not 1 <= n <= limit:
        raise ValueError(f"{case} projection check supports 1 <= n <= {limit}")
    field = projection_field(case, n)
    N = case_dimension(case, n)
    params = {"case": case, "n": n}
    rep = Report()
    R = r_matrix(N, "+", field)
    c = (R.partial_transpose(N, 2) * flip(N, field)).first_difference(transposed_flip_expansion(N, field))
    rep.add("transposed-r-times-flip", params, c is None, None if c is None else list(c))

    Rt = twisted_r(case, n, field)
    iota, pi = iota_pi(case, n, field)
    M = reduced_operator(case, n, field, drop_q=mutation == "drop-q")
    c = (pi * Rt).first_difference(M * pi)
    rep.add("projection-intertwines", params, c is None, None if c is None else list(c))
    c = (Rt * iota).first_difference(iota * M)
    rep.add("inclusion-intertwines", params, c is None, None if c is None else list(c))
    return rep
