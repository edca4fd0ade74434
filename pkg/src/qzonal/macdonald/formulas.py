"""Closed box-product formulas, Schur polynomials and one-row Hall-Littlewood polynomials."""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from ..exactfield import determinant, rational_field
from .partitions import Partition, parse_partition, partitions_of
from .symmetric import SymmetricPolynomial, x_names


def _qt(field, q, t):
    field = field or rational_field("q", "t")
    q = field.gen("q") if q is None else field(q)
    t = field.gen("t") if t is None else field(t)
    return field, q, t


def principal_specialization_formula(mu, n, field=None, q=None, t=None):
    """P_mu(t^(n-1), .., t, 1; q, t) as a product over boxes."""
    mu = parse_partition(mu)
    if len(mu) > n:
        raise ValueError(f"{tuple(mu)} has more than n = {n} parts")
    field, q, t = _qt(field, q, t)
    out = t ** mu.n_statistic()
    for a, l, ac, lc in mu.box_stats():
        out = out * (1 - q**ac * t ** (n - lc)) / (1 - q**a * t ** (l + 1))
    return out


def norm_ratio_formula(mu, n, field=None, q=None, t=None):
    """<P_mu, P_mu>' / <1, 1>' as a product over boxes."""
    mu = parse_partition(mu)
    if len(mu) > n:
        raise ValueError(f"{tuple(mu)} has more than n = {n} parts")
    field, q, t = _qt(field, q, t)
    out = field.one
    for a, l, ac, lc in mu.box_stats():
        num = (1 - q**ac * t ** (n - lc)) * (1 - q ** (a + 1) * t**l)
        den = (1 - q ** (ac + 1) * t ** (n - 1 - lc)) * (1 - q**a * t ** (l + 1))
        out = out * num / den
    return out


# Schur polynomials -----------------------------------------------------------

def complete_homogeneous_values(values, kmax, field):
    """[h_0, .., h_kmax] evaluated at the given values."""
    h = [field.one] + [field.zero] * kmax
    for v in values:
        # multiply the generating function by 1 / (1 - v z)
        for k in range(1, kmax + 1):
            h[k] = h[k] + v * h[k - 1]
    return h


def jacobi_trudi_value(lam, values, field):
    """s_lam(values) = det(h_{lam_i - i + j})."""
    lam = parse_partition(lam)
    m = len(lam)
    if m == 0:
        return field.one
    h = complete_homogeneous_values([field(v) for v in values], lam[0] + m, field)

    def entry(i, j):
        k = lam[i] - i + j
        return h[k] if 0 <= k < len(h) else field.zero

    return determinant([[entry(i, j) for j in range(m)] for i in range(m)], field)


def hook_content_value(lam, N, q):
    """s_lam(q^(N-1), .., q, 1) = q^n(lam) prod (1 - q^(N + c)) / (1 - q^h)."""
    lam = parse_partition(lam)
    conj = lam.conjugate()
    out = q ** lam.n_statistic()
    for i, j in lam.boxes():
        content = j - i
        hook = lam[i - 1] - j + conj.part(j) - i + 1
        out = out * (1 - q ** (N + content)) / (1 - q**hook)
    return out


class FormulaMismatch(AssertionError):
    """Two independent evaluations of the same quantity disagree."""


def schur_d(lam, N, field=None):
    """d(lam) = s_lam(q^(2(N-1)), .., q^2, 1), by hook-content and checked by Jacobi-Trudi."""
    lam = parse_partition(lam)
    if len(lam) > N:
        raise ValueError(f"{tuple(lam)} has more than N = {N} parts")
    field = field or rational_field("q")
    q = field.gen("q")
    hook = hook_content_value(lam, N, q * q)
    jt = jacobi_trudi_value(lam, [q ** (2 * (N - 1 - k)) for k in range(N)], field)
    if hook != jt:
        raise FormulaMismatch(f"hook-content {hook} != Jacobi-Trudi {jt} for {tuple(lam)}, N = {N}")
    return hook


@lru_cache(maxsize=None)
def _schur_polynomial(lam, n):
    field = rational_field("q", "t")
    m = len(lam)
    if m > n:
        return SymmetricPolynomial(n, field)
    if m == 0:
        return SymmetricPolynomial(n, field, {(): 1})

    def h(k):
        if k < 0:
            return SymmetricPolynomial(n, field)
        return SymmetricPolynomial(n, field, {nu: 1 for nu in partitions_of(k, n)})

    rows = [[h(lam[i] - i + j) for j in range(m)] for i in range(m)]
    total = SymmetricPolynomial(n, field)
    for w in permutations(range(m)):
        sign = (-1) ** sum(1 for a in range(m) for b in range(a + 1, m) if w[a] > w[b])
        term = SymmetricPolynomial(n, field, {(): sign})
        for i in range(m):
            term = term * rows[i][w[i]]
        total = total + term
    return total


def schur_polynomial(lam, n) -> SymmetricPolynomial:
    """s_lam(x_1..x_n) from the Jacobi-Trudi determinant, on the m-basis."""
    return _schur_polynomial(parse_partition(lam), n)


# Hall-Littlewood ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _hall_littlewood_row(ell, n):
    field = rational_field("t", *x_names(n))
    t = field.gen("t")
    xs = [field.gen(v) for v in x_names(n)]
    total = field.zero
    for k in range(n):
        term = xs[k] ** ell
        for j in range(n):
            if j != k:
                term = term * (xs[k] - t * xs[j]) / (xs[k] - xs[j])
        total = total + term
    if not total.is_polynomial():
        raise FormulaMismatch("one-row Hall-Littlewood sum is not a polynomial")
    K = rational_field("q", "t")
    tk = K.gen("t")
    grouped = {}
    ti = field.index("t")
    for e, c in total.num.terms():
        xe = tuple(int(k) for i, k in enumerate(e) if i != ti)
        grouped[xe] = grouped.get(xe, K.zero) + K(int(c.p)) / int(c.q) * tk ** int(e[ti])
    return SymmetricPolynomial.from_monomials(n, K, grouped)


def hall_littlewood_row(ell, n) -> SymmetricPolynomial:
    """P_(ell)(x_1..x_n; t) = sum_k x_k^ell prod_{j != k} (x_k - t x_j) / (x_k - x_j)."""
    if ell < 1:
        raise ValueError("need ell >= 1")
    return _hall_littlewood_row(ell, n)
