"""The vector representation read off the blocks of R^+ and R^-.

R^+- = sum_ij e_ij (x) rho(L^+-_ij), so rho(L^+-_ij) is the (i, j) block of
R^+-.  From L^+_ii = q^eps_i, L^+_ij = (q - q^-1) q^eps_i E_ji (i < j) and
L^-_ij = -(q - q^-1) E_ji q^-eps_j (i > j) one recovers q^eps_i, E_ij and
the Chevalley generators e_k = E_{k,k+1}, f_k = E_{k+1,k}.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..report import Report, check_mutation
from .fmatrix import FMatrix
from .rmatrix import default_field, r_matrix


@dataclass
class VectorRep:
    N: int
    field: object
    l_plus: dict
    l_minus: dict
    q_eps: list       # rho(q^eps_i), 0-based
    q_eps_inv: list   # rho(q^-eps_i)
    E: dict           # rho(E_ij) for i != j, 1-based keys
    e: list           # rho(e_k), k = 1..N-1 stored 0-based
    f: list

    def q_weight(self, coeffs):
        """rho(q^h) for h = sum coeffs[i] eps_i."""
        m = FMatrix.identity(self.N, self.field)
        for i, c in enumerate(coeffs):
            base = self.q_eps[i] if c >= 0 else self.q_eps_inv[i]
            for _ in range(abs(c)):
                m = m * base
        return m

    def t(self, k, power=1):
        """rho(t_k^power) with t_k = q^(eps_k - eps_{k+1}), k 1-based."""
        coeffs = [0] * self.N
        coeffs[k - 1] = power
        coeffs[k] = -power
        return self.q_weight(coeffs)


def vector_rep(N, field=None):
    if N < 2:
        raise ValueError("need N >= 2")
    field = field or default_field()
    q = field.gen("q")
    d = q - 1 / q
    Rp, Rm = r_matrix(N, "+", field), r_matrix(N, "-", field)
    lp = {(i + 1, j + 1): Rp.block(i, j, N) for i in range(N) for j in range(N)}
    lm = {(i + 1, j + 1): Rm.block(i, j, N) for i in range(N) for j in range(N)}
    q_eps = [lp[(i, i)] for i in range(1, N + 1)]
    q_eps_inv = [lm[(i, i)] for i in range(1, N + 1)]
    E = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i < j:
                E[(j, i)] = (q_eps_inv[i - 1] * lp[(i, j)]).scale(1 / d)
            elif i > j:
                E[(j, i)] = (lm[(i, j)] * q_eps[j - 1]).scale(-1 / d)
    e = [E[(k, k + 1)] for k in range(1, N)]
    f = [E[(k + 1, k)] for k in range(1, N)]
    return VectorRep(N, field, lp, lm, q_eps, q_eps_inv, E, e, f)


def _cell(c):
    return None if c is None else list(c)


# scale-e1: multiply the image of e_1 by q.
VECTOR_REP_MUTATIONS = {"scale-e1"}


def verify_vector_rep(N, mutation=None):
    """Defining relations of U_q(gl(N)) on the extracted generator images."""
    check_mutation(mutation, VECTOR_REP_MUTATIONS)
    rep = Report()
    V = vector_rep(N)
    q = V.field.gen("q")
    if mutation == "scale-e1":
        V.e[0] = V.e[0].scale(q)
    I = FMatrix.identity(N, V.field)
    params = {"N": N}
    bad = None
    for i in range(N):
        if (V.q_eps[i] * V.q_eps_inv[i]).first_difference(I) is not None:
            bad = [i + 1, i + 1]
            break
    rep.add("q-eps-inverse", params, bad is None, bad)

    bad = None
    for i in range(1, N):
        for j in range(1, N):
            lhs = V.e[i - 1] * V.f[j - 1] - V.f[j - 1] * V.e[i - 1]
            if i == j:
                rhs = (V.t(i) - V.t(i, -1)).scale(1 / (q - 1 / q))
            else:
                rhs = FMatrix.zeros(N, N, V.field)
            if lhs.first_difference(rhs) is not None:
                bad = [i, j]
    rep.add("e-f-commutator", params, bad is None, bad)

    bad = None
    for k in range(1, N + 1):
        for i in range(1, N):
            # q^eps_k e_i q^-eps_k = q^<eps_k, alpha_i> e_i
            pair = (k == i) - (k == i + 1)
            c = q**pair
            conj_e = V.q_eps[k - 1] * V.e[i - 1] * V.q_eps_inv[k - 1]
            conj_f = V.q_eps[k - 1] * V.f[i - 1] * V.q_eps_inv[k - 1]
            if conj_e != V.e[i - 1].scale(c) or conj_f != V.f[i - 1].scale(1 / c):
                bad = [k, i]
    rep.add("weight-conjugation", params, bad is None, bad)

    # E_ij = E_ik E_kj - q^+-1 E_kj E_ik for k strictly between i and j
    bad = None
    for (i, j), Eij in V.E.items():
        for k in range(min(i, j) + 1, max(i, j)):
            c = q if i < j else 1 / q
            if Eij != V.E[(i, k)] * V.E[(k, j)] - (V.E[(k, j)] * V.E[(i, k)]).scale(c):
                bad = [i, j, k]
    rep.add("root-vector-recursion", params, bad is None, bad)

    bad = None
    for gens, name in ((V.e, "e"), (V.f, "f")):
        for i in range(1, N):
            for j in range(1, N):
                if i == j:
                    continue
                x, y = gens[i - 1], gens[j - 1]
                if abs(i - j) == 1:
                    lhs = x * x * y - (x * y * x).scale(q + 1 / q) + y * x * x
                else:
                    lhs = x * y - y * x
                if not lhs.is_zero() and bad is None:
                    bad = [name, i, j]
    rep.add("serre", params, bad is None, bad)
    return rep


def theta(V, j):
    """theta_j = f_j - q t_j^-1 e_j in the vector representation (j 1-based)."""
    q = V.field.gen("q")
    return V.f[j - 1] - (V.t(j, -1) * V.e[j - 1]).scale(q)


# drop-rhs: compare the cubic relation against 0 instead of -theta_j.
GK_MUTATIONS = {"drop-rhs"}


def verify_gk_relations(n, mutation=None):
    """The cubic and commuting relations for theta_1..theta_{n-1} (vector representation only)."""
    check_mutation(mutation, GK_MUTATIONS)
    if not 2 <= n <= 4:
        raise ValueError("need 2 <= n <= 4")
    V = vector_rep(n)
    q = V.field.gen("q")
    th = [theta(V, j) for j in range(1, n)]
    rep = Report()
    for i in range(1, n):
        for j in range(1, n):
            if i == j:
                continue
            x, y = th[i - 1], th[j - 1]
            params = {"n": n, "i": i, "j": j}
            if abs(i - j) == 1:
                lhs = x * x * y - (x * y * x).scale(q + 1 / q) + y * x * x
                rhs = FMatrix.zeros(n, n, V.field) if mutation == "drop-rhs" else -y
                c = lhs.first_difference(rhs)
                rep.add("gk-cubic", params, c is None, _cell(c))
            else:
                c = (x * y).first_difference(y * x)
                rep.add("gk-commute", params, c is None, _cell(c))
    return rep
