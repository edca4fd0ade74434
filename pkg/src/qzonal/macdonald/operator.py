"""The first Macdonald q-difference operator and P_mu by triangular solve.

D_1 = sum_k Delta(x_1, .., t x_k, .., x_n) / Delta(x) T_{q, x_k}, where
Delta(x) = prod_{i<j} (x_j - x_i) and T_{q, x_k} scales x_k by q.  On
symmetric polynomials the numerator sum_k Delta_k(x) f(.., q x_k, ..) is
divisible by Delta; the division is done exactly and its remainder checked.
"""
from __future__ import annotations

from functools import lru_cache

from ..exactfield import RationalFunction, rational_field
from .partitions import Partition, dominance_leq, parse_partition, partitions_of
from .symmetric import NotSymmetric, SymmetricPolynomial, monomial_exponents, x_names


class SingularDiagonal(ArithmeticError):
    """Two eigenvalues on the triangular diagonal coincide."""


def _poly_lcm(a, b):
    return a * b / a.gcd(b)


def _polynomial_image(value, big, what):
    v = big(value)
    if not v.den.is_one():
        raise ValueError(f"{what} must be a polynomial in the parameters, got {value}")
    return v.num


def _difference_product(values, one):
    out = one
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            out = out * (values[j] - values[i])
    return out


def apply_D1(f: SymmetricPolynomial, q_val=None, t_val=None) -> SymmetricPolynomial:
    """D_1 f re-collected on the m-basis over the field of (q_val, t_val)."""
    K = None
    for v in (q_val, t_val):
        if isinstance(v, RationalFunction):
            K = v.field
            break
    K = K or f.field
    q_val = K.gen("q") if q_val is None else q_val
    t_val = K.gen("t") if t_val is None else t_val
    n = f.n
    big = K.extend(*x_names(n))
    ctx = big.ctx
    one = ctx.constant(1)
    xs = [ctx.gen(big.index(v)) for v in x_names(n)]
    qv = _polynomial_image(q_val, big, "q")
    tv = _polynomial_image(t_val, big, "t")

    coeffs = {mu: big(K(c)) for mu, c in f.coeffs.items()}
    D = one
    for c in coeffs.values():
        D = _poly_lcm(D, c.den)
    P = ctx.constant(0)
    for mu, c in coeffs.items():
        scaled = c.num * (D / c.den)
        for e in monomial_exponents(mu, n):
            term = scaled
            for x, k in zip(xs, e):
                if k:
                    term = term * x**k
            P = P + term

    gens = list(ctx.gens())
    total = ctx.constant(0)
    for k in range(n):
        images = list(gens)
        images[big.index(f"x{k + 1}")] = qv * xs[k]
        shifted = list(xs)
        shifted[k] = tv * xs[k]
        total = total + _difference_product(shifted, one) * P.compose(*images)
    quotient, remainder = divmod(total, _difference_product(xs, one))
    if not remainder.is_zero():
        raise NotSymmetric("nonzero remainder dividing by the difference product")

    nk = len(K.names)
    Dk = K.ctx.from_dict({e[:nk]: c for e, c in D.terms()})
    grouped = {}
    for e, c in quotient.terms():
        grouped.setdefault(tuple(e[nk:]), {})[tuple(e[:nk])] = c
    terms = {x: RationalFunction(K, K.ctx.from_dict(d), Dk) for x, d in grouped.items()}
    return SymmetricPolynomial.from_monomials(n, K, terms)


def eigenvalue(mu, n, q, t):
    """sum_k t^(n-k) q^(mu_k)."""
    mu = parse_partition(mu)
    total = 0
    for k in range(1, n + 1):
        total = total + t ** (n - k) * q ** mu.part(k)
    return total


def default_qt_field():
    return rational_field("q", "t")


@lru_cache(maxsize=None)
def d1_matrix(n, d):
    """{nu: D_1 m_nu} for all partitions nu of d with at most n parts, symbolic q, t."""
    K = default_qt_field()
    return {nu: apply_D1(SymmetricPolynomial(n, K, {nu: 1})) for nu in partitions_of(d, n)}


def triangularity_defect(n, d):
    """First (row, column) entry of D_1 on the m-basis violating triangularity, or None.

    Also checks the diagonal entries against the eigenvalue formula.
    """
    K = default_qt_field()
    q, t = K.gens("q", "t")
    for nu, image in d1_matrix(n, d).items():
        for rho, c in image.coeffs.items():
            if not dominance_leq(rho, nu):
                return [list(rho), list(nu)]
        if image.coefficient(nu) != eigenvalue(nu, n, q, t):
            return [list(nu), list(nu)]
    return None


@lru_cache(maxsize=None)
def _macdonald_p(mu, n):
    K = default_qt_field()
    q, t = K.gens("q", "t")
    M = d1_matrix(n, mu.size)
    lam = eigenvalue(mu, n, q, t)
    below = [nu for nu in partitions_of(mu.size, n) if dominance_leq(nu, mu)]
    coeff = {mu: K.one}
    # decreasing lexicographic order refines dominance: every rho > nu is solved first
    for nu in below:
        if nu == mu:
            continue
        diag = eigenvalue(nu, n, q, t) - lam
        if diag.is_zero():
            raise SingularDiagonal(f"eigenvalues of {tuple(nu)} and {tuple(mu)} coincide")
        rhs = K.zero
        for rho, c_rho in coeff.items():
            rhs = rhs + M[rho].coefficient(nu) * c_rho
        coeff[nu] = -rhs / diag
    return SymmetricPolynomial(n, K, coeff)


def macdonald_p(mu, n) -> SymmetricPolynomial:
    """P_mu(x_1..x_n; q, t) on the m-basis over Q(q, t)."""
    mu = parse_partition(mu)
    if len(mu) > n:
        raise ValueError(f"{tuple(mu)} has more than n = {n} parts")
    return _macdonald_p(Partition(mu), n)
