"""The constant-term scalar product as a truncated q-series, and a Gram-Schmidt oracle.

<F, G>' = (1/n!) CT_x [F(x^-1) G(x) w(x; q_M, t_M)] with
w = prod_{i<j} (x_i/x_j; q)_inf (x_j/x_i; q)_inf / ((t x_i/x_j; q)_inf (t x_j/x_i; q)_inf).
Everything is expanded in the base variable q through a fixed order K.
"""
from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..exactfield import MultiLaurent, TruncatedQSeries, qseries_expand_infinite_factor, rational_field
from ..macdonald import (
    SymmetricPolynomial, macdonald_p, monomial_exponents, norm_ratio_formula, partitions_of, partitions_up_to,
    x_names,
)
from ..report import Report, check_mutation
from .cases import CaseConfig

DEFAULT_K = 20
MAX_K = 24


class TruncationWarning(UserWarning):
    """The truncation order is too small to tell the compared quantities apart."""


def _check_args(n, K):
    if n != 2:
        raise ValueError("the series oracle supports n = 2")
    if not 0 <= K <= MAX_K:
        raise ValueError(f"need 0 <= K <= {MAX_K}")


@lru_cache(maxsize=None)
def weight_series(case, n, K, drop_denominator=False):
    """w(x; q_M, t_M) through q^K; ``drop_denominator`` omits the t-factors (mutation hook)."""
    cfg = CaseConfig(case, n)
    eq, et = cfg.qt_exponents
    xs = x_names(n)
    w = TruncatedQSeries.constant(xs, 1, K)
    for i in range(n):
        for j in range(i + 1, n):
            exps = [0] * n
            exps[i], exps[j] = 1, -1
            u = MultiLaurent.monomial(xs, exps)
            for mono in (u, u.invert_variables()):
                w = w * qseries_expand_infinite_factor(mono, 0, eq, False, K)
                if not drop_denominator:
                    w = w * qseries_expand_infinite_factor(mono, et, eq, True, K)
    return w


def specialise(P: SymmetricPolynomial, case, swap=False):
    """Substitute (q, t) -> (q_M, t_M) in the coefficients, landing in Q(q)."""
    K = rational_field("q")
    qm, tm = CaseConfig(case, P.n).qt_values(K.gen("q"), swap)
    return P.substitute_params({"q": qm, "t": tm}, K)


def polynomial_series(P: SymmetricPolynomial, K):
    """A symmetric polynomial with coefficients in Q(q) as a series with Laurent coefficients in x."""
    xs = x_names(P.n)
    out = TruncatedQSeries.constant(xs, 0, K)
    for mu, c in P.coeffs.items():
        m = MultiLaurent(xs, {e: 1 for e in monomial_exponents(mu, P.n)})
        out = out + TruncatedQSeries.from_rational(c, xs, K) * m
    return out


def _as_series(F, K):
    if isinstance(F, TruncatedQSeries):
        return F
    return polynomial_series(F, K)


def _constant_term_pairing(A: TruncatedQSeries, W: TruncatedQSeries):
    """CT_x[A W] as a list of Fractions, pairing exponents e with -e."""
    K = min(A.order, W.order)
    out = []
    for m in range(K + 1):
        s = Fraction(0)
        for i in range(m + 1):
            a, w = A.coeffs[i], W.coeffs[m - i]
            if not a or not w:
                continue
            for e, c in a.items():
                d = w.coefficient(tuple(-x for x in e))
                if d:
                    s += Fraction(c) * Fraction(d)
        out.append(s)
    return out


def scalar_product_series(F, G, case, n=2, K=DEFAULT_K, normalized=True, drop_denominator=False):
    """<F, G>' through q^K, divided by <1, 1>' when ``normalized``.

    F and G are SymmetricPolynomials with coefficients in Q(q) (already at
    (q_M, t_M)) or TruncatedQSeries in x.  The result is constant in x.
    """
    _check_args(n, K)
    case = CaseConfig(case, n).case
    W = weight_series(case, n, K, drop_denominator)
    A = _as_series(F, K).invert_variables() * _as_series(G, K)
    value = [c / factorial(n) for c in _constant_term_pairing(A, W)]
    out = TruncatedQSeries((), value, K)
    if normalized:
        one = [c / factorial(n) for c in _constant_term_pairing(TruncatedQSeries.constant(x_names(n), 1, K), W)]
        out = out / TruncatedQSeries((), one, K)
    return out


def rational_series(f, K):
    """Expansion of a rational function of q alone as a constant-in-x series."""
    return TruncatedQSeries.from_rational(f, (), K)


def first_nonzero(series):
    return next((m for m, c in enumerate(series.coeffs) if c), None)


# drop-denominator: omit the (t x_i/x_j; q)_inf factors from the weight.
SERIES_MUTATIONS = {"drop-denominator"}


def verify_orthogonality(case, n=2, max_size=3, K=DEFAULT_K, mutation=None):
    """<P_mu, P_nu>' vanishes through q^K for all mu != nu with |mu|, |nu| <= max_size."""
    check_mutation(mutation, SERIES_MUTATIONS)
    _check_args(n, K)
    drop = mutation == "drop-denominator"
    case = CaseConfig(case, n).case
    Kq = rational_field("q")
    parts = partitions_up_to(max_size, n)
    Ps = {mu: specialise(macdonald_p(mu, n), case) for mu in parts}
    rep = Report()
    for i, mu in enumerate(parts):
        for nu in parts[i + 1:]:
            s = scalar_product_series(Ps[mu], Ps[nu], case, n, K, True, drop)
            if mu.size == nu.size:
                control = scalar_product_series(
                    SymmetricPolynomial.monomial(mu, n, Kq), SymmetricPolynomial.monomial(nu, n, Kq),
                    case, n, K, True, drop,
                )
                if control.is_zero():
                    warnings.warn(f"K = {K} cannot separate m_{mu} and m_{nu}", TruncationWarning)
            params = {"case": case, "n": n, "mu": list(mu), "nu": list(nu), "K": K}
            rep.add("series-orthogonality", params, s.is_zero(), first_nonzero(s))
    return rep


def verify_series_norms(case, n=2, max_size=3, K=DEFAULT_K, mutation=None):
    """<P_mu, P_mu>' / <1, 1>' agrees with the closed norm formula through q^K."""
    check_mutation(mutation, SERIES_MUTATIONS)
    _check_args(n, K)
    cfg = CaseConfig(case, n)
    Kq = rational_field("q")
    qm, tm = cfg.qt_values(Kq.gen("q"))
    drop = mutation == "drop-denominator"
    rep = Report()
    for mu in partitions_up_to(max_size, n):
        P = specialise(macdonald_p(mu, n), cfg.case)
        s = scalar_product_series(P, P, cfg.case, n, K, True, drop)
        expected = rational_series(norm_ratio_formula(mu, n, Kq, qm, tm), K)
        diff = s - expected
        rep.add("series-norm-ratio", {"case": cfg.case, "n": n, "mu": list(mu), "K": K},
                diff.is_zero(), first_nonzero(diff))
    return rep


def gram_schmidt_oracle(case, n=2, d=2, K=DEFAULT_K, drop_denominator=False):
    """Orthogonalise m_mu, |mu| = d, from the bottom of dominance order up.

    Returns {mu: {nu: TruncatedQSeries}} with the leading coefficient 1.
    """
    _check_args(n, K)
    if not 0 <= d <= 3:
        raise ValueError("the Gram-Schmidt oracle supports degree d <= 3")
    case = CaseConfig(case, n).case
    Kq = rational_field("q")
    order = list(reversed(partitions_of(d, n)))
    gram = {}
    for a in order:
        for b in order:
            gram[(a, b)] = scalar_product_series(
                SymmetricPolynomial.monomial(a, n, Kq), SymmetricPolynomial.monomial(b, n, Kq),
                case, n, K, False, drop_denominator,
            )

    def pair(u, v):
        total = TruncatedQSeries((), [0], K)
        for a, ca in u.items():
            for b, cb in v.items():
                total = total + ca * cb * gram[(a, b)]
        return total

    one = TruncatedQSeries((), [1], K)
    family = {}
    for mu in order:
        vec = {mu: one}
        for nu, prev in family.items():
            coeff = pair({mu: one}, prev) / pair(prev, prev)
            for rho, c in prev.items():
                vec[rho] = vec.get(rho, TruncatedQSeries((), [0], K)) - coeff * c
        family[mu] = vec
    return family


def verify_gram_schmidt(case, n=2, d=2, K=DEFAULT_K, mutation=None):
    """The Gram-Schmidt family equals P_mu at (q_M, t_M), coefficient by coefficient through q^K."""
    check_mutation(mutation, SERIES_MUTATIONS)
    family = gram_schmidt_oracle(case, n, d, K, mutation == "drop-denominator")
    case = CaseConfig(case, n).case
    rep = Report()
    for mu, vec in family.items():
        P = specialise(macdonald_p(mu, n), case)
        bad = None
        for nu in partitions_of(d, n):
            got = vec.get(nu, TruncatedQSeries((), [0], K))
            want = rational_series(P.coefficient(nu), K)
            if got != want:
                bad = [list(nu), first_nonzero(got - want)]
                break
        rep.add("gram-schmidt-matches-macdonald", {"case": case, "n": n, "mu": list(mu), "K": K}, bad is None, bad)
    return rep
