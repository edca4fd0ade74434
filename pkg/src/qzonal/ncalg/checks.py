"""X = T J T^t, quantum minors, Pfaffian, torus restriction and the algebra-level checks."""
from __future__ import annotations

import random
from itertools import combinations, permutations

from ..exactfield import q_factorial, rational_field
from ..qmatrix.rmatrix import a_names, case_dimension, normalize_case, r_matrix
from ..report import Report, check_mutation
from .algebra import STRAIGHTEN_MUTATIONS, QuantumMatrixAlgebra, quantum_matrix_algebra
from .formal import FormMatrix, evaluate_quadratic


def algebra_for(case, n, mutation=None, extra=()):
    """Algebra of size N = n (SO) or 2n (Sp) with a_1..a_n in the coefficients."""
    N = case_dimension(case, n)
    names = ("q",) + a_names(n) + tuple(extra)
    if mutation is None:
        return quantum_matrix_algebra(N, names)
    return QuantumMatrixAlgebra(N, rational_field(*names), mutation)


def x_entries(case, n, algebra=None, sp_sign=-1):
    """The N x N matrix of x_ij = (T J T^t)_ij in normal form, 0-based lists.

    ``sp_sign`` is the sign in front of q in the symplectic entries; only a
    mutation test changes it.
    """
    case = normalize_case(case)
    A = algebra or algebra_for(case, n)
    F = A.field
    a = [F.gen(v) for v in a_names(n)]
    q = F.gen("q")
    N = case_dimension(case, n)
    t = A.t
    X = []
    for i in range(1, N + 1):
        row = []
        for j in range(1, N + 1):
            x = A.zero()
            for k in range(1, n + 1):
                if case == "SO":
                    x = x + (t(i, k) * t(j, k)).scale(a[k - 1])
                else:
                    x = x + (t(i, 2 * k - 1) * t(j, 2 * k) + (t(i, 2 * k) * t(j, 2 * k - 1)).scale(sp_sign * q)).scale(a[k - 1])
            row.append(x)
        X.append(row)
    return X


def _pair_table(values):
    cache = {}

    def pair(s1, s2):
        key = (s1, s2)
        if key not in cache:
            cache[key] = values(s1) * values(s2)
        return cache[key]

    return pair


def _compare_forms(rep, identity, params, lhs, rhs, pair, zero):
    diff = lhs - rhs
    bad = None
    for cell in sorted(diff.cells):
        if not evaluate_quadratic(diff.cells[cell], pair, zero).is_zero():
            bad = list(cell)
            break
    rep.add(identity, params, bad is None, bad)


def verify_x_relations(case, n, mutation=None):
    """Symmetry relations and the reflection-type relation for X = T J T^t."""
    check_mutation(mutation, STRAIGHTEN_MUTATIONS)
    case = normalize_case(case)
    A = algebra_for(case, n, mutation)
    F = A.field
    q = F.gen("q")
    N = case_dimension(case, n)
    X = x_entries(case, n, A)
    params = {"case": case, "n": n}
    rep = Report()

    bad = None
    for i in range(N):
        for j in range(N):
            if case == "SO" and i < j:
                ok = X[i][j] == X[j][i].scale(q)
            elif case == "Sp" and i == j:
                ok = X[i][i].is_zero()
            elif case == "Sp" and i < j:
                ok = (X[i][j].scale(q) + X[j][i]).is_zero()
            else:
                continue
            if not ok and bad is None:
                bad = [i + 1, j + 1]
    rep.add("x-symmetry", params, bad is None, bad)

    R = r_matrix(N, "+", F)
    Rt2 = R.partial_transpose(N, 2)

    def sym(a, b):
        return (a, b)

    X1 = FormMatrix.leg1(N, sym, F)
    X2 = FormMatrix.leg2(N, sym, F)
    lhs = X2.left_scalar(R).right_scalar(Rt2).times(X1)
    rhs = X1.right_scalar(Rt2).times(X2.right_scalar(R))
    pair = _pair_table(lambda s: X[s[0]][s[1]])
    _compare_forms(rep, "x-reflection-relation", params, lhs, rhs, pair, A.zero())
    return rep


def verify_rtt(N, mutation=None):
    """R T_2 T_1 = T_1 T_2 R in normal form."""
    check_mutation(mutation, STRAIGHTEN_MUTATIONS)
    A = quantum_matrix_algebra(N) if mutation is None else QuantumMatrixAlgebra(N, mutation=mutation)
    F = A.field
    R = r_matrix(N, "+", F)

    def sym(a, b):
        return (a, b)

    T1 = FormMatrix.leg1(N, sym, F)
    T2 = FormMatrix.leg2(N, sym, F)
    lhs = T2.left_scalar(R).times(T1)
    rhs = T1.times(T2.right_scalar(R))
    pair = _pair_table(lambda s: A.t(s[0] + 1, s[1] + 1))
    rep = Report()
    _compare_forms(rep, "rtt-relation", {"N": N}, lhs, rhs, pair, A.zero())
    return rep


def _inversions(w):
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


# sign-flip: -q -> +q inside the symplectic x entries (visible already at n = 1).
# sum-sign-flip: -q -> +q in the signed sum; n = 1 has only the identity
# permutation, so this one is detected from n = 2 on.
PFAFFIAN_MUTATIONS = {"sign-flip", "sum-sign-flip"} | STRAIGHTEN_MUTATIONS


def quantum_pfaffian_check(n, mutation=None):
    """[n]_{q^4}! det_q(T) a_1...a_n against the signed sum of x-products."""
    check_mutation(mutation, PFAFFIAN_MUTATIONS)
    straighten = mutation if mutation in STRAIGHTEN_MUTATIONS else None
    A = algebra_for("Sp", n, straighten)
    F = A.field
    q = F.gen("q")
    a = [F.gen(v) for v in a_names(n)]
    X = x_entries("Sp", n, A, sp_sign=1 if mutation == "sign-flip" else -1)
    N = 2 * n
    lhs = A.qdet().scale(q_factorial(n, q**4))
    for ak in a:
        lhs = lhs.scale(ak)
    sign = q if mutation == "sum-sign-flip" else -q
    rhs = A.zero()
    for w in permutations(range(N)):
        if any(w[2 * k] > w[2 * k + 1] for k in range(n)):
            continue
        term = A.one()
        for k in range(n):
            term = term * X[w[2 * k]][w[2 * k + 1]]
        rhs = rhs + term.scale(sign ** _inversions(w))
    rep = Report()
    rep.add("quantum-pfaffian", {"n": n}, lhs == rhs)
    return rep


def z_names(N):
    return tuple(f"z{j}" for j in range(1, N + 1))


def restrict_to_torus(p, field=None):
    """Image under t_ij -> delta_ij z_j, as a Laurent polynomial in z over the coefficient field."""
    A = p.algebra
    field = field or A.field.extend(*z_names(A.N))
    z = [field.gen(v) for v in z_names(A.N)]
    total = field.zero
    for mono, c in p.terms.items():
        term = field(c)
        for g in mono:
            i, j = A.position(g)
            if i != j:
                term = None
                break
            term = term * z[i - 1]
        if term is not None:
            total = total + term
    return total


def phi_fundamental(case, n, r, which="phi", algebra=None):
    """phi_0 or phi for the fundamental weight of level r (sums of quantum minors).

    SO: squared minors of T with weights a_I^-1 a_J.  Sp: minors on paired
    rows/columns (2i-1, 2i) with the same weights, not squared.
    """
    case = normalize_case(case)
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    A = algebra or algebra_for(case, n)
    F = A.field
    a = [F.gen(v) for v in a_names(n)]
    rows = [tuple(range(1, r + 1))] if which == "phi0" else list(combinations(range(1, n + 1), r))
    if which not in ("phi", "phi0"):
        raise ValueError("which must be 'phi' or 'phi0'")
    total = A.zero()
    for I in rows:
        for J in combinations(range(1, n + 1), r):
            weight = F.one
            for i in I:
                weight = weight / a[i - 1]
            for j in J:
                weight = weight * a[j - 1]
            if case == "SO":
                m = A.quantum_minor(I, J)
                term = m * m
            else:
                pi = tuple(x for i in I for x in (2 * i - 1, 2 * i))
                pj = tuple(x for j in J for x in (2 * j - 1, 2 * j))
                term = A.quantum_minor(pi, pj)
            total = total + term.scale(weight)
    return total


CENTRALITY_MUTATIONS = STRAIGHTEN_MUTATIONS


def centrality_check(N, mutation=None):
    check_mutation(mutation, CENTRALITY_MUTATIONS)
    A = quantum_matrix_algebra(N) if mutation is None else QuantumMatrixAlgebra(N, mutation=mutation)
    d = A.qdet()
    bad = None
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            t = A.t(i, j)
            if not (d * t - t * d).is_zero():
                bad = [i, j]
                break
        if bad:
            break
    rep = Report()
    rep.add("qdet-central", {"N": N}, bad is None, bad)
    return rep


def random_element(A, rng, max_degree=3, max_terms=3):
    q = A.field.gen("q")
    p = A.zero()
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        word = [(rng.randint(1, A.N), rng.randint(1, A.N)) for _ in range(deg)]
        c = q ** rng.randint(-2, 2) * rng.choice([1, -1, 2, 3])
        p = p + A.monomial(word).scale(c)
    return p


def associativity_fuzz(N=3, trials=200, max_degree=3, seed=0, mutation=None):
    """(p r) s = p (r s) on random triples, each factor of degree <= max_degree."""
    check_mutation(mutation, STRAIGHTEN_MUTATIONS)
    A = QuantumMatrixAlgebra(N, mutation=mutation)
    rng = random.Random(seed)
    bad = None
    for k in range(trials):
        p, r, s = (random_element(A, rng, max_degree) for _ in range(3))
        if not ((p * r) * s - p * (r * s)).is_zero():
            bad = k
            break
    rep = Report()
    rep.add("associativity", {"N": N, "trials": trials, "max_degree": max_degree, "seed": seed}, bad is None, bad)
    return rep


def torus_specialization(n, case):
    """a per the standard specialisation: SO a_k = q^(n-k); Sp a_k = q^(2(n-k))."""
    case = normalize_case(case)
    step = 1 if case == "SO" else 2
    return {f"a{k}": step * (n - k) for k in range(1, n + 1)}


def elementary_symmetric(values, r, field):
    total = field.zero
    for S in combinations(range(len(values)), r):
        term = field.one
        for s in S:
            term = term * values[s]
        total = total + term
    return total


def verify_phi_restrictions(case, n, mutation=None):
    """phi restricted to the torus equals e_r of z^2 (SO) or of z_{2k-1} z_{2k} (Sp)."""
    check_mutation(mutation, {"drop-weight"} | STRAIGHTEN_MUTATIONS)
    case = normalize_case(case)
    straighten = mutation if mutation in STRAIGHTEN_MUTATIONS else None
    A = algebra_for(case, n, straighten)
    N = case_dimension(case, n)
    field = A.field.extend(*z_names(N))
    q = field.gen("q")
    z = [field.gen(v) for v in z_names(N)]
    torus = {name: q**e for name, e in torus_specialization(n, case).items()}
    if case == "SO":
        vals = [zz * zz for zz in z]
    else:
        vals = [z[2 * k] * z[2 * k + 1] for k in range(n)]
    rep = Report()
    for r in range(1, n + 1):
        phi = phi_fundamental(case, n, r, "phi", A)
        if mutation == "drop-weight":
            phi = phi_fundamental(case, n, r, "phi0", A)
        res = restrict_to_torus(phi, field)
        expected = elementary_symmetric(vals, r, field)
        ok_symbolic = res == expected
        ok_special = res.substitute(torus) == expected
        rep.add("phi-restriction", {"case": case, "n": n, "r": r}, ok_symbolic and ok_special)
    return rep
