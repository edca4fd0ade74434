"""Torus restrictions of zonal spherical functions and the radial eigen-equation.

The restriction of phi(lambda) is P_mu(x; q_M, t_M) in the case's x-variables
times (z_1 .. z_N)^ell.  The radial part of the central element acts as

    SO: sum_k Delta(z_1^2, .., q^2 z_k^2, ..) / Delta(z^2) T_{q^2, z_k}
    Sp: (1 + q^2) sum_k Delta(.., q^4 x_k, ..) / Delta(x) T_{q, z_2k-1} T_{q, z_2k}
"""
from __future__ import annotations

from ..exactfield import rational_field, substitute
from ..macdonald import apply_D1, eigenvalue, macdonald_p, parse_partition
from ..ncalg.checks import z_names
from ..qmatrix.triangular import delta_ratio
from ..report import Report, check_mutation
from .cases import MAX_RANK, CaseConfig, duplicate_partition, radial_eigenvalue, weight_eigenvalue


def zonal_restriction(case, mu, ell=0, n=None, swap=False):
    """P_mu(x; q_M, t_M) (z_1 .. z_N)^ell as an element of Q(q, z_1 .. z_N).

    ``n`` defaults to the length of mu; ``swap`` exchanges q_M and t_M (mutation hook).
    """
    if isinstance(case, CaseConfig):
        cfg = case
    else:
        cfg = CaseConfig(case, n if n is not None else max(len(parse_partition(mu)), 1))
    mu = cfg.check_mu(mu)
    F = cfg.z_field()
    q = F.gen("q")
    z = [F.gen(v) for v in z_names(cfg.N)]
    qm, tm = cfg.qt_values(q, swap)
    P = macdonald_p(mu, cfg.n)
    out = P.to_function(F, cfg.x_values(z), {"q": qm, "t": tm})
    det = F.one
    for zk in z:
        det = det * zk
    return out * det**ell


def radial_operator(cfg: CaseConfig, f):
    """Apply the case's radial D_1 to f in Q(q, z)."""
    F = f.field
    q = F.gen("q")
    z = [F.gen(v) for v in z_names(cfg.N)]
    x = cfg.x_values(z)
    total = F.zero
    if cfg.case == "SO":
        for k in range(cfg.n):
            shifted = substitute(f, {f"z{k + 1}": q * q * z[k]}, F)
            total = total + delta_ratio(x, k, q * q, F.one) * shifted
        return total
    for k in range(cfg.n):
        a, b = 2 * k, 2 * k + 1
        shifted = substitute(f, {f"z{a + 1}": q * z[a], f"z{b + 1}": q * z[b]}, F)
        total = total + delta_ratio(x, k, q**4, F.one) * shifted
    return (1 + q * q) * total


# swap-params: build P_mu with (q_M, t_M) exchanged.
RADIAL_MUTATIONS = {"swap-params"}


def verify_radial_eigen(case, mu, n, ell=0, mutation=None):
    check_mutation(mutation, RADIAL_MUTATIONS)
    cfg = CaseConfig(case, n)
    if n > MAX_RANK:
        raise ValueError(f"radial eigen check supports n <= {MAX_RANK}")
    mu = cfg.check_mu(mu)
    if mu.size > 5:
        raise ValueError("radial eigen check supports |mu| <= 5")
    swap = mutation == "swap-params"
    params = {"case": cfg.case, "n": n, "mu": list(mu), "ell": ell}
    rep = Report()

    phi = zonal_restriction(cfg, mu, ell, swap=swap)
    F = phi.field
    q = F.gen("q")
    lam = duplicate_partition(cfg.case, mu, ell, n)
    chi = F(weight_eigenvalue(lam, cfg.N, q))
    lhs = radial_operator(cfg, phi)
    rep.add("radial-eigen", params, lhs == chi * phi, str(lhs - chi * phi))

    mu_form = radial_eigenvalue(cfg.case, mu, n, q) * q ** (2 * ell)
    rep.add("eigenvalue-parametrisation", params, chi == mu_form, [str(chi), str(mu_form)])

    # the same relation in x, via the generic Macdonald operator
    Kq = rational_field("q")
    qq = Kq.gen("q")
    qm, tm = cfg.qt_values(qq, swap)
    P = macdonald_p(mu, n).substitute_params({"q": qm, "t": tm}, Kq)
    qe, te = cfg.qt_values(qq)
    D = apply_D1(P, qe, te)
    if cfg.case == "Sp":
        D = D.scale(1 + qq * qq)
    ev = eigenvalue(mu, n, qe, te) * (1 + qq * qq if cfg.case == "Sp" else 1)
    rep.add("macdonald-operator-consistency", params, D == P.scale(ev) and Kq(ev) == radial_eigenvalue(cfg.case, mu, n, qq))
    return rep
