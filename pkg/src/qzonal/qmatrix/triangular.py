"""Upper triangular calculus behind the first Macdonald operator.

A(t) is unitriangular with (1 - t^-1) above the diagonal, A(x;t) = A(t) diag(x).
F(x, xi; t) is the upper triangular matrix with diagonal xi commuting with
A(x;t); G(x;t) is the unitriangular matrix diagonalising A(x;t).  Delta is the
difference product prod_{i<j} (x_j - x_i).
"""
from __future__ import annotations

from ..exactfield import rational_field
from ..report import Report, check_mutation
from .fmatrix import FMatrix


class CollidingPoints(ValueError):
    """Two x-values coincide, so the recurrence would divide by zero."""


def triangular_field(n, extra=()):
    names = ("t",) + tuple(f"x{k}" for k in range(1, n + 1)) + tuple(f"xi{k}" for k in range(1, n + 1))
    return rational_field(*names, *extra)


def symbols(field, prefix, n):
    return [field.gen(f"{prefix}{k}") for k in range(1, n + 1)]


def difference_product(values, one):
    """prod_{i<j} (v_j - v_i)."""
    out = one
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            out = out * (values[j] - values[i])
    return out


def delta_ratio(values, k, t, one):
    """Delta(v_1, .., t v_k, .., v_m) / Delta(v), k 0-based."""
    shifted = list(values)
    shifted[k] = t * shifted[k]
    return difference_product(shifted, one) / difference_product(values, one)


def a_matrix(n, t, field, offdiag=None):
    """A(t); ``offdiag`` overrides the above-diagonal coefficient (mutation hook)."""
    c = 1 - 1 / t if offdiag is None else offdiag
    entries = {(j, j): 1 for j in range(n)}
    entries.update({(i, j): c for i in range(n) for j in range(i + 1, n)})
    return FMatrix(n, n, field, entries)


def a_inverse(n, t, field):
    entries = {(j, j): 1 for j in range(n)}
    entries.update({(i, j): (1 - t) * t ** (i - j) for i in range(n) for j in range(i + 1, n)})
    return FMatrix(n, n, field, entries)


def a_x_matrix(x, t, field, offdiag=None):
    return a_matrix(len(x), t, field, offdiag) * FMatrix.diag(x, field)


def f_matrix(x, xi, t, field, mode="recurrence"):
    """F(x, xi; t) by the recurrence from the diagonal or by the closed formula."""
    n = len(x)
    F = {}
    if mode == "recurrence":
        for j in range(n):
            F[(j, j)] = field(xi[j])
        for gap in range(1, n):
            for i in range(n - gap):
                j = i + gap
                if x[i] == x[j]:
                    raise CollidingPoints(f"x{i + 1} = x{j + 1}")
                s = field.zero
                for k in range(i, j):
                    s = s + F[(i, k)]
                for k in range(i + 1, j + 1):
                    s = s - x[k] / x[j] * F[(k, j)]
                F[(i, j)] = (1 - t) / (t * (1 - x[i] / x[j])) * s
    elif mode == "closed":
        for i in range(n):
            for j in range(i, n):
                seg = list(x[i:j + 1])
                total = field.zero
                for k in range(i, j + 1):
                    shifted = list(seg)
                    shifted[k - i] = t * x[k]
                    num = x[k] * x[j] * difference_product(shifted, field.one)
                    den = (t * x[k] - x[i]) * (t * x[k] - x[j]) * difference_product(seg, field.one)
                    total = total + xi[k] * num / den
                F[(i, j)] = t ** (i - j) * (1 - t) ** 2 * total
    else:
        raise ValueError("mode must be 'recurrence' or 'closed'")
    return FMatrix(n, n, field, F)


def g_matrices(x, t, field):
    """(G, G^-1) from the closed entry formulas."""
    n = len(x)
    gp, gm = {}, {}
    for i in range(n):
        for j in range(i, n):
            seg = list(x[i:j + 1])
            base = difference_product(seg, field.one)
            up = list(seg)
            up[-1] = t * up[-1]
            lo = list(seg)
            lo[0] = t * lo[0]
            if i == j:
                gp[(i, j)] = gm[(i, j)] = 1
                continue
            gp[(i, j)] = t ** (i - j) * (1 - t) * x[j] * difference_product(up, field.one) / ((x[i] - t * x[j]) * base)
            gm[(i, j)] = t ** (i - j) * (t - 1) * x[j] * difference_product(lo, field.one) / ((t * x[i] - x[j]) * base)
    return FMatrix(n, n, field, gp), FMatrix(n, n, field, gm)


def _cell(c):
    return None if c is None else list(c)


def one_row_symbol(x, xi, t, field):
    """sum_k xi_k Delta(.., t x_k, ..) / Delta(x)."""
    total = field.zero
    for k in range(len(x)):
        total = total + xi[k] * delta_ratio(x, k, t, field.one)
    return total


# a-offdiag: replace the off-diagonal coefficient (1 - t^-1) of A(t) by (1 - t).
TRIANGULAR_MUTATIONS = {"a-offdiag"}


def verify_triangular(n, mutation=None, hl_max=3):
    """All identities of the A / F / G calculus for symbolic x, xi, t."""
    check_mutation(mutation, TRIANGULAR_MUTATIONS)
    if not 1 <= n <= 4:
        raise ValueError("need 1 <= n <= 4")
    field = triangular_field(n, tuple(f"eta{k}" for k in range(1, n + 1)))
    t = field.gen("t")
    x, xi, eta = symbols(field, "x", n), symbols(field, "xi", n), symbols(field, "eta", n)
    offdiag = (1 - t) if mutation == "a-offdiag" else None
    params = {"n": n}
    rep = Report()
    I = FMatrix.identity(n, field)

    A = a_matrix(n, t, field, offdiag)
    c = (A * a_inverse(n, t, field)).first_difference(I)
    rep.add("a-inverse", params, c is None, _cell(c))

    Fr = f_matrix(x, xi, t, field, "recurrence")
    Fc = f_matrix(x, xi, t, field, "closed")
    c = Fr.first_difference(Fc)
    rep.add("f-closed-equals-recurrence", params, c is None, _cell(c))

    Ax = a_x_matrix(x, t, field, offdiag)
    c = (Ax * Fr).first_difference(Fr * Ax)
    rep.add("a-commutes-with-f", params, c is None, _cell(c))

    lhs = field.zero
    for i in range(n):
        for j in range(i, n):
            lhs = lhs + t ** (n - 1 - i) * Fr[i, j]
    rep.add("f-weighted-sum", params, lhs == one_row_symbol(x, xi, t, field))

    G, Ginv = g_matrices(x, t, field)
    c = (Ax * G).first_difference(G * FMatrix.diag(x, field))
    rep.add("g-diagonalises-a", params, c is None, _cell(c))
    c = (G * Ginv).first_difference(I)
    rep.add("g-inverse", params, c is None, _cell(c))
    c = (G * FMatrix.diag(xi, field) * Ginv).first_difference(Fr)
    rep.add("f-conjugate-of-diagonal", params, c is None, _cell(c))

    bad = None
    for i in range(n):
        for j in range(i, n):
            seg = x[i:j + 1]
            col = field.zero
            row = field.zero
            for k in range(i, j + 1):
                col = col + t ** (j - k) * G[k, j]
                row = row + Ginv[i, k]
            if col != delta_ratio(seg, len(seg) - 1, t, field.one):
                bad = bad or ["column", i + 1, j + 1]
            if row != t ** (i - j) * delta_ratio(seg, 0, t, field.one):
                bad = bad or ["row", i + 1, j + 1]
    rep.add("g-row-column-sums", params, bad is None, bad)

    Fone = f_matrix(x, [field.one] * n, t, field)
    c = Fone.first_difference(I)
    rep.add("f-at-one-is-identity", params, c is None, _cell(c))
    Feta = f_matrix(x, eta, t, field)
    Fprod = f_matrix(x, [a * b for a, b in zip(xi, eta)], t, field)
    c = (Fr * Feta).first_difference(Fprod)
    rep.add("f-multiplicative", params, c is None, _cell(c))
    c = f_matrix(x, x, t, field).first_difference(Ax)
    rep.add("f-at-x-is-a", params, c is None, _cell(c))
    if n <= 3:
        Finv = f_matrix(x, [1 / v for v in xi], t, field)
        c = (Fr * Finv).first_difference(I)
        rep.add("f-inverse", params, c is None, _cell(c))

    if hl_max:
        from ..macdonald import hall_littlewood_row
    for ell in range(1, hl_max + 1):
        sym = one_row_symbol(x, [v**ell for v in x], t, field)
        hl = hall_littlewood_row(ell, n).to_function(field, x, {"t": 1 / t})
        rep.add("one-row-symbol-is-hall-littlewood", {"n": n, "ell": ell}, sym == t ** (n - 1) * hl)
    return rep
