"""c(lambda), d(lambda) and the norm identity c(lambda)^2 / d(lambda) = <P_mu, P_mu>' / <1, 1>'.

c(lambda) is the value of the torus restriction at the point z_j = q^(N-j);
d(lambda) = s_lambda(q^(2(N-1)), .., 1) is the dimension-type factor.
"""
from __future__ import annotations

from ..exactfield import determinant, rational_field, substitute
from ..macdonald import (
    FormulaMismatch, macdonald_p, norm_ratio_formula, principal_specialization_formula, schur_d,
)
from ..report import Report, check_mutation
from .cases import MAX_RANK, CaseConfig, duplicate_partition
from .restriction import zonal_restriction

MAX_NORM_SIZE = 4


def q_field():
    return rational_field("q")


def _prepare(case, mu, n):
    cfg = CaseConfig(case, n)
    if n > MAX_RANK:
        raise ValueError(f"norm checks support n <= {MAX_RANK}")
    mu = cfg.check_mu(mu)
    return cfg, mu


def c_lambda_formula(cfg, mu, field=None):
    """Principal specialization at (q_M, t_M), times q^|mu| in the symplectic case."""
    field = field or q_field()
    q = field.gen("q")
    qm, tm = cfg.qt_values(q)
    c = principal_specialization_formula(mu, cfg.n, field, qm, tm)
    if cfg.case == "Sp":
        c = c * q**mu.size
    return c


def c_lambda_product(cfg, mu, field=None):
    """The box product for c(lambda) written directly in q."""
    field = field or q_field()
    q = field.gen("q")
    n = cfg.n
    if cfg.case == "SO":
        out = q ** (2 * mu.n_statistic())
        for a, l, ac, lc in mu.box_stats():
            out = out * (1 - q ** (2 * (2 * ac - lc + n))) / (1 - q ** (2 * (2 * a + l + 1)))
        return out
    out = q ** sum((4 * k - 3) * p for k, p in enumerate(mu, 1))
    for a, l, ac, lc in mu.box_stats():
        out = out * (1 - q ** (2 * (ac - 2 * lc + 2 * n))) / (1 - q ** (2 * (a + 2 * l + 2)))
    return out


def d_lambda_product(cfg, mu, field=None):
    """The box product for d(lambda) written in terms of mu."""
    field = field or q_field()
    q = field.gen("q")
    n = cfg.n
    if cfg.case == "SO":
        out = q ** (4 * mu.n_statistic())
        for a, l, ac, lc in mu.box_stats():
            out = out * (1 - q ** (2 * (2 * ac - lc + n))) * (1 - q ** (2 * (2 * ac - lc + n + 1)))
            out = out / ((1 - q ** (2 * (2 * a + l + 1))) * (1 - q ** (2 * (2 * a + l + 2))))
        return out
    out = q ** (2 * sum((4 * k - 3) * p for k, p in enumerate(mu, 1)))
    for a, l, ac, lc in mu.box_stats():
        out = out * (1 - q ** (2 * (ac - 2 * lc + 2 * n))) * (1 - q ** (2 * (ac - 2 * lc + 2 * n - 1)))
        out = out / ((1 - q ** (2 * (a + 2 * l + 1))) * (1 - q ** (2 * (a + 2 * l + 2))))
    return out


def ratio_product(cfg, mu, field=None):
    """The box product for c(lambda)^2 / d(lambda) written in q."""
    field = field or q_field()
    q = field.gen("q")
    n = cfg.n
    out = field.one
    for a, l, ac, lc in mu.box_stats():
        if cfg.case == "SO":
            num = (1 - q ** (2 * (2 * ac - lc + n))) * (1 - q ** (2 * (2 * a + l + 2)))
            den = (1 - q ** (2 * (2 * ac - lc + n + 1))) * (1 - q ** (2 * (2 * a + l + 1)))
        else:
            num = (1 - q ** (2 * (ac - 2 * lc + 2 * n))) * (1 - q ** (2 * (a + 2 * l + 1)))
            den = (1 - q ** (2 * (ac - 2 * lc + 2 * n - 1))) * (1 - q ** (2 * (a + 2 * l + 2)))
        out = out * num / den
    return out


def c_lambda_at_rho(cfg, mu, field=None):
    """The torus restriction evaluated at z_j = q^(N-j)."""
    field = field or q_field()
    phi = zonal_restriction(cfg, mu)
    q = phi.field.gen("q")
    point = dict(zip([f"z{j}" for j in range(1, cfg.N + 1)], cfg.rho_point(q)))
    return substitute(phi, point, phi.field).coerce(field)


def c_lambda(case, mu, n):
    """c(lambda) from the box formula, checked against evaluation of P_mu at the point."""
    cfg, mu = _prepare(case, mu, n)
    K = q_field()
    q = K.gen("q")
    c = c_lambda_formula(cfg, mu, K)
    qm, tm = cfg.qt_values(q)
    direct = macdonald_p(mu, n).substitute_params({"q": qm, "t": tm}, K).evaluate([tm ** (n - k) for k in range(1, n + 1)])
    if cfg.case == "Sp":
        direct = direct * q**mu.size
    if c != direct:
        raise FormulaMismatch(f"c(lambda) box formula {c} != direct evaluation {direct}")
    return c


def bialternant_value(lam, values, field):
    """s_lam(values) = det(v_i^(lam_j + N - j)) / det(v_i^(N - j))."""
    N = len(values)
    parts = lam.padded(N)
    num = determinant([[v ** (parts[j] + N - 1 - j) for j in range(N)] for v in values], field)
    den = determinant([[v ** (N - 1 - j) for j in range(N)] for v in values], field)
    return num / den


def d_lambda(case, mu, n):
    """d(lambda) = s_lambda(q^(2(N-1)), .., 1) for the duplicated lambda, checked by evaluation."""
    cfg, mu = _prepare(case, mu, n)
    K = q_field()
    q = K.gen("q")
    lam = duplicate_partition(cfg.case, mu, 0, n)
    d = schur_d(lam, cfg.N, K)
    direct = bialternant_value(lam, [q ** (2 * (cfg.N - k)) for k in range(1, cfg.N + 1)], K)
    if d != direct:
        raise FormulaMismatch(f"d(lambda) hook-content {d} != bialternant evaluation {direct}")
    return d


# swap-params: evaluate the norm ratio formula at (t_M, q_M) instead of (q_M, t_M).
NORM_MUTATIONS = {"swap-params"}


def verify_norm_identity(case, mu, n, mutation=None):
    check_mutation(mutation, NORM_MUTATIONS)
    cfg, mu = _prepare(case, mu, n)
    if mu.size > MAX_NORM_SIZE:
        raise ValueError(f"norm checks support |mu| <= {MAX_NORM_SIZE}")
    K = q_field()
    q = K.gen("q")
    params = {"case": cfg.case, "n": n, "mu": list(mu)}
    rep = Report()
    c = c_lambda(cfg.case, mu, n)
    d = d_lambda(cfg.case, mu, n)
    at_rho = c_lambda_at_rho(cfg, mu, K)
    rep.add("c-at-rho-point", params, c == at_rho, [str(c), str(at_rho)])
    rep.add("c-box-product", params, c == c_lambda_product(cfg, mu, K))
    rep.add("d-box-product", params, d == d_lambda_product(cfg, mu, K))
    qm, tm = cfg.qt_values(q, swap=mutation == "swap-params")
    formula = norm_ratio_formula(mu, n, K, qm, tm)
    ratio = c * c / d
    rep.add("norm-identity", params, ratio == formula, [str(ratio), str(formula)])
    rep.add("ratio-box-product", params, ratio == ratio_product(cfg, mu, K))
    return rep


def norm_table_row(case, mu, n):
    """One row of the norms table: case, mu, n, c, d, c^2/d, formula, equal."""
    cfg, mu = _prepare(case, mu, n)
    K = q_field()
    q = K.gen("q")
    c = c_lambda(cfg.case, mu, n)
    d = d_lambda(cfg.case, mu, n)
    qm, tm = cfg.qt_values(q)
    formula = norm_ratio_formula(mu, n, K, qm, tm)
    ratio = c * c / d
    return {
        "case": cfg.case, "mu": str(mu), "n": n, "c_lambda": str(c), "d_lambda": str(d),
        "ratio": str(ratio), "formula_ratio": str(formula), "equal": ratio == formula,
    }
