"""R-matrices of the vector representation, J(a), Yang-Baxter and reflection equations."""
from __future__ import annotations

from ..exactfield import rational_field
from ..report import Report, check_mutation
from .fmatrix import FMatrix


def default_field(*extra):
    return rational_field("q", *extra)


def _cell(c):
    return None if c is None else list(c)


def flip(N, field):
    """P = sum e_ij (x) e_ji."""
    return FMatrix(N * N, N * N, field, {(i * N + j, j * N + i): 1 for i in range(N) for j in range(N)})


def r_matrix(N, sign="+", field=None):
    """R^+ or R^- acting on V (x) V with dim V = N."""
    field = field or default_field()
    q = field.gen("q")
    d = q - 1 / q
    entries = {}
    for i in range(N):
        for j in range(N):
            diag = q if i == j else field.one
            entries[(i * N + j, i * N + j)] = diag if sign == "+" else diag.inverse()
    for i in range(N):
        for j in range(N):
            if sign == "+" and i < j:
                # e_ij (x) e_ji maps v_j (x) v_i to v_i (x) v_j
                entries[(i * N + j, j * N + i)] = d
            if sign == "-" and j < i:
                entries[(i * N + j, j * N + i)] = -d
    if sign not in "+-":
        raise ValueError("sign must be '+' or '-'")
    return FMatrix(N * N, N * N, field, entries)


def swap_legs(m, N):
    """R_21 = P R_12 P."""
    P = flip(N, m.field)
    return P * m * P


def leg_embed(m, N, legs):
    """Embed an operator on V(x)V into V(x)V(x)V acting on the given pair of legs."""
    I = FMatrix.identity(N, m.field)
    if legs == (1, 2):
        return m.kron(I)
    if legs == (2, 3):
        return I.kron(m)
    if legs == (1, 3):
        P23 = I.kron(flip(N, m.field))
        return P23 * m.kron(I) * P23
    raise ValueError(f"unsupported legs {legs}")


# zero-offdiag: drop the first off-diagonal entry.  At N = 2 the result is
# diagonal and still solves Yang-Baxter; only the R+ - R- check catches it.
# scale-offdiag: multiply that entry by q, which breaks Yang-Baxter for all N.
YBE_MUTATIONS = {"zero-offdiag", "scale-offdiag"}


def _mutate_offdiag(R, mutation):
    cell = next(c for c, _ in R.items() if c[0] != c[1])
    entries = dict(R.items())
    if mutation == "zero-offdiag":
        del entries[cell]
    else:
        entries[cell] = entries[cell] * R.field.gen("q")
    return FMatrix(R.nrows, R.ncols, R.field, entries)


def verify_ybe(N, mutation=None):
    check_mutation(mutation, YBE_MUTATIONS)
    field = default_field()
    q = field.gen("q")
    rep = Report()
    params = {"N": N}
    Rs = {}
    for sign in "+-":
        R = r_matrix(N, sign, field)
        if mutation:
            R = _mutate_offdiag(R, mutation)
        Rs[sign] = R
        R12, R13, R23 = (leg_embed(R, N, legs) for legs in ((1, 2), (1, 3), (2, 3)))
        lhs = R12 * R13 * R23
        rhs = R23 * R13 * R12
        c = lhs.first_difference(rhs)
        rep.add(f"ybe{sign}", params, c is None, _cell(c))
    Rp, Rm = Rs["+"], Rs["-"]
    ident = FMatrix.identity(N * N, field)
    c = (Rp * swap_legs(Rm, N)).first_difference(ident)
    rep.add("r-plus-inverse-is-r-minus-21", params, c is None, _cell(c))
    c = (Rp - Rm).first_difference(flip(N, field).scale(q - 1 / q))
    rep.add("r-plus-minus-difference", params, c is None, _cell(c))
    for sign in "+-":
        R = Rs[sign]
        c = R.transpose().first_difference(swap_legs(R, N))
        rep.add(f"r{sign}-transpose-is-r21", params, c is None, _cell(c))
        c = R.partial_transpose(N, 2).partial_transpose(N, 2).first_difference(R)
        rep.add(f"r{sign}-partial-transpose-involution", params, c is None, _cell(c))
    c = swap_legs(Rp, N).partial_transpose(N, 1).first_difference(Rp.partial_transpose(N, 2))
    rep.add("r21-t1-equals-r12-t2", params, c is None, _cell(c))
    return rep


# J(a) -----------------------------------------------------------------------

def case_dimension(case, n):
    case = normalize_case(case)
    return n if case == "SO" else 2 * n


def normalize_case(case):
    c = str(case).strip().lower()
    if c == "so":
        return "SO"
    if c == "sp":
        return "Sp"
    raise ValueError(f"unknown case {case!r}")


def a_names(n):
    return tuple(f"a{k}" for k in range(1, n + 1))


def j_matrix(case, n, field=None, a=None):
    """J(a) for the orthogonal (diagonal) or symplectic (2x2 block) case."""
    case = normalize_case(case)
    field = field or default_field(*a_names(n))
    if a is None:
        a = [field.gen(v) for v in a_names(n)]
    q = field.gen("q")
    N = case_dimension(case, n)
    entries = {}
    for k in range(n):
        if case == "SO":
            entries[(k, k)] = a[k]
        else:
            entries[(2 * k, 2 * k + 1)] = a[k]
            entries[(2 * k + 1, 2 * k)] = -q * a[k]
    return FMatrix(N, N, field, entries)


def w_vector(J):
    """Coordinates of w_J = sum v_i J_ij (x) v_j, indexed by (i, j)."""
    return {c: v for c, v in J.items()}


# j-plus-e12 keeps the reflection equation at SO n = 2 (an upper triangular
# solution); there only the inverse and w_J checks flag it.  j-plus-e21
# breaks the reflection equation itself in every case.
REFLECTION_MUTATIONS = {"j-plus-e12", "j-plus-e21"}


def verify_reflection(case, n, mutation=None):
    check_mutation(mutation, REFLECTION_MUTATIONS)
    case = normalize_case(case)
    field = default_field(*a_names(n))
    q = field.gen("q")
    a = [field.gen(v) for v in a_names(n)]
    N = case_dimension(case, n)
    params = {"case": case, "n": n}
    rep = Report()
    J = j_matrix(case, n, field)
    if mutation == "j-plus-e12":
        J = J + FMatrix.unit(N, 0, 1, field)
    elif mutation == "j-plus-e21":
        J = J + FMatrix.unit(N, 1, 0, field)
    I = FMatrix.identity(N, field)
    R = r_matrix(N, "+", field)
    Rt2 = R.partial_transpose(N, 2)
    J1, J2 = J.kron(I), I.kron(J)
    lhs = R * J2 * Rt2 * J1
    rhs = J1 * Rt2 * J2 * R
    c = lhs.first_difference(rhs)
    rep.add("reflection-equation", params, c is None, _cell(c))

    ainv = [x.inverse() for x in a]
    expected_inv = j_matrix(case, n, field, ainv)
    if case == "Sp":
        expected_inv = expected_inv.scale(-1 / q)
    c = (J * expected_inv).first_difference(I)
    rep.add("j-inverse", params, c is None, _cell(c))

    w = w_vector(J)
    if case == "SO":
        expected = {(k, k): a[k] for k in range(n)}
    else:
        expected = {}
        for k in range(n):
            expected[(2 * k, 2 * k + 1)] = a[k]
            expected[(2 * k + 1, 2 * k)] = -q * a[k]
    same = set(w) == set(expected) and all(w[c] == expected[c] for c in w)
    rep.add("w-j-form", params, same, None if same else sorted(set(w) ^ set(expected)))
    return rep
