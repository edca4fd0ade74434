"""Acceptance suite: one printed PASS/FAIL line per criterion, each also a test."""
import time

import pytest

from qzonal.cli import run
from qzonal.macdonald import (
    apply_D1, eigenvalue, macdonald_p, partitions_up_to, principal_specialization_formula, schur_d,
    schur_polynomial, triangularity_defect,
)
from qzonal.ncalg import (
    associativity_fuzz, centrality_check, quantum_pfaffian_check, verify_phi_restrictions, verify_x_relations,
)
from qzonal.qmatrix import verify_gk_relations, verify_projections, verify_reflection, verify_triangular, verify_ybe
from qzonal.exactfield import rational_field
from qzonal.zonal import verify_norm_identity, verify_orthogonality, verify_rank_one, verify_series_norms
from test_cli import MUTATION_RUNS


def all_ok(reports):
    return all(r.ok for r in reports)


def ybe():
    return all_ok(verify_ybe(N) for N in (2, 3, 4))


def reflection():
    return all_ok([verify_reflection("SO", n) for n in (2, 3, 4)] + [verify_reflection("Sp", n) for n in (1, 2)])


def quantum_matrix_algebra():
    return associativity_fuzz(3, 200, 3).ok and all_ok(centrality_check(N) for N in (2, 3))


def x_relations():
    return all_ok([verify_x_relations("SO", 2), verify_x_relations("SO", 3), verify_x_relations("Sp", 2)])


def pfaffian():
    return all_ok(quantum_pfaffian_check(n) for n in (1, 2))


def fundamental_restrictions():
    return all_ok([verify_phi_restrictions("SO", 2), verify_phi_restrictions("SO", 3), verify_phi_restrictions("Sp", 2)])


def triangular_suite():
    return all_ok(verify_triangular(n) for n in (2, 3, 4))


def projections():
    return all_ok([verify_projections("SO", 2), verify_projections("SO", 3), verify_projections("Sp", 2)])


def macdonald_engine():
    K = rational_field("q", "t")
    q, t = K.gens("q", "t")
    for n in (1, 2, 3):
        for d in range(6):
            if triangularity_defect(n, d) is not None:
                return False
        for mu in partitions_up_to(5, n):
            P = macdonald_p(mu, n)
            if apply_D1(P) != P.scale(eigenvalue(mu, n, q, t)):
                return False
            if len(mu) < n and P.set_variable_zero() != macdonald_p(mu, n - 1):
                return False
            if P.substitute_params({"t": q}, K) != schur_polynomial(mu, n):
                return False
    return True


def closed_specializations():
    K = rational_field("q", "t")
    t = K.gen("t")
    for n in (1, 2, 3):
        for mu in partitions_up_to(5, n):
            direct = macdonald_p(mu, n).evaluate([t ** (n - k) for k in range(1, n + 1)])
            if direct != principal_specialization_formula(mu, n):
                return False
    for N in (1, 2, 3, 4):
        for lam in partitions_up_to(8, N):
            schur_d(lam, N)  # raises when hook-content and Jacobi-Trudi disagree
    return True


def norm_identities():
    return all_ok(
        verify_norm_identity(case, mu, n)
        for case in ("SO", "Sp") for n in (1, 2, 3) for mu in partitions_up_to(4, n)
    )


def series_oracle():
    return all_ok(
        f(case, 2, 3, 20) for case in ("SO", "Sp") for f in (verify_orthogonality, verify_series_norms)
    )


def rank_one():
    return verify_rank_one(9).ok


def gk_relations():
    return all_ok(verify_gk_relations(n) for n in (3, 4))


def mutation_sensitivity():
    for verb, args in MUTATION_RUNS.items():
        clean = args[: args.index("--mutate")]
        out = "/dev/null"
        if run(["verify", verb, *clean, "-o", out]) != 0 or run(["verify", verb, *args, "-o", out]) != 1:
            return False
    return True


CRITERIA = [
    (1, "Yang-Baxter and R+ - R- at N = 2, 3, 4", ybe, 10),
    (2, "reflection equation, SO n = 2..4, Sp n = 1, 2", reflection, 30),
    (3, "quantum matrix algebra: associativity fuzz and det_q centrality", quantum_matrix_algebra, None),
    (4, "X-relations, SO n = 2, 3 and Sp n = 2", x_relations, 120),
    (5, "quantum Pfaffian at n = 1, 2", pfaffian, None),
    (6, "fundamental zonal restrictions, SO n = 2, 3 and Sp n = 2", fundamental_restrictions, None),
    (7, "triangular calculus at n = 2, 3, 4", triangular_suite, 120),
    (8, "projection onto the diagonal subspace, SO n = 2, 3 and Sp n = 2", projections, None),
    (9, "Macdonald engine, |mu| <= 5, n <= 3", macdonald_engine, 120),
    (10, "principal specialization and Schur d(lambda)", closed_specializations, None),
    (11, "norm identities c^2/d, |mu| <= 4, n <= 3", norm_identities, None),
    (12, "series oracle at n = 2, K = 20", series_oracle, 300),
    (13, "rank-one fixed vector, ell <= 9", rank_one, None),
    (14, "cubic coideal relations at n = 3, 4", gk_relations, None),
    (15, "mutation sensitivity of every verify verb", mutation_sensitivity, None),
]


@pytest.mark.parametrize("number,title,check,budget", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_acceptance(number, title, check, budget, capsys):
    start = time.perf_counter()
    try:
        ok = bool(check())
        error = ""
    except Exception as exc:  # report the criterion as failing, then re-raise below
        ok, error = False, f" ({type(exc).__name__}: {exc})"
    elapsed = time.perf_counter() - start
    in_time = budget is None or elapsed < budget
    status = "PASS" if ok and in_time else "FAIL"
    limit = "" if budget is None else f" / {budget}s"
    with capsys.disabled():
        print(f"\nACCEPTANCE {number:2d} {status}  {title}  [{elapsed:.2f}s{limit}]{error}")
    assert ok, error
    assert in_time, f"took {elapsed:.1f}s"
