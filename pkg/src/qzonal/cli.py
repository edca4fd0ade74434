"""Command line: run verifiers and computations, emit JSON, CSV or plain text.

Exit codes: 0 all identities hold, 1 at least one failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import macdonald, ncalg, qmatrix, zonal
from .report import MutationError, Report

OUTPUT_DIR_ENV = "QZONAL_OUTPUT_DIR"

# supported parameter ranges per verb; kept small enough for exact checks
RANGES = {
    "ybe": {"N": (2, 5)},
    "reflection": {"SO": (1, 4), "Sp": (1, 3)},
    "xalg": {"SO": (1, 3), "Sp": (1, 2)},
    "restrictions": {"SO": (1, 3), "Sp": (1, 2)},
    "pfaffian": (1, 2),
    "gk": (2, 4),
    "vector-rep": (2, 5),
    "rtt": (2, 3),
    "triangular": (1, 4),
    "projections": {"SO": (1, 3), "Sp": (1, 2)},
    "zonal": {"SO": (1, zonal.MAX_RANK), "Sp": (1, zonal.MAX_RANK)},
    "norms": {"SO": (1, zonal.MAX_RANK), "Sp": (1, zonal.MAX_RANK)},
}


class UsageError(Exception):
    """Invalid argument combination, reported with exit code 2."""


def _check_range(value, bounds, what):
    lo, hi = bounds
    if not lo <= value <= hi:
        raise UsageError(f"{what} = {value} is outside the supported range {lo}..{hi}")


def _case_range(verb, case, n):
    _check_range(n, RANGES[verb][case], f"n for {verb} ({case})")


def _case(text):
    try:
        return qmatrix.normalize_case(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(text):
    try:
        return macdonald.parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# verify handlers ---------------------------------------------------------------

def _verify_ybe(args):
    _check_range(args.N, RANGES["ybe"]["N"], "N")
    return qmatrix.verify_ybe(args.N, args.mutate)


def _verify_reflection(args):
    _case_range("reflection", args.case, args.n)
    return qmatrix.verify_reflection(args.case, args.n, args.mutate)


def _verify_xalg(args):
    _case_range("xalg", args.case, args.n)
    return ncalg.verify_x_relations(args.case, args.n, args.mutate)


def _verify_restrictions(args):
    _case_range("restrictions", args.case, args.n)
    return ncalg.verify_phi_restrictions(args.case, args.n, args.mutate)


def _verify_pfaffian(args):
    _check_range(args.n, RANGES["pfaffian"], "n")
    return ncalg.quantum_pfaffian_check(args.n, args.mutate)


def _verify_rtt(args):
    _check_range(args.N, RANGES["rtt"], "N")
    rep = ncalg.verify_rtt(args.N, args.mutate)
    return rep.extend(ncalg.centrality_check(args.N, args.mutate))


def _verify_associativity(args):
    if args.trials < 1:
        raise UsageError("need at least one trial")
    return ncalg.associativity_fuzz(args.N, args.trials, args.max_degree, args.seed, args.mutate)


def _verify_gk(args):
    _check_range(args.n, RANGES["gk"], "n")
    return qmatrix.verify_gk_relations(args.n, args.mutate)


def _verify_vector_rep(args):
    _check_range(args.N, RANGES["vector-rep"], "N")
    return qmatrix.verify_vector_rep(args.N, args.mutate)


def _verify_triangular(args):
    _check_range(args.n, RANGES["triangular"], "n")
    return qmatrix.verify_triangular(args.n, args.mutate)


def _verify_projections(args):
    _case_range("projections", args.case, args.n)
    return qmatrix.verify_projections(args.case, args.n, args.mutate)


def _verify_zonal(args):
    _case_range("zonal", args.case, args.n)
    if args.mu is not None:
        mus = [args.mu]
    else:
        mus = macdonald.partitions_up_to(3, args.n)
    rep = Report()
    for mu in mus:
        if len(mu) > args.n:
            raise UsageError(f"mu = {mu} has more than n = {args.n} parts")
        if mu.size > 5:
            raise UsageError("zonal checks support |mu| <= 5")
        rep.extend(zonal.verify_radial_eigen(args.case, mu, args.n, args.ell, args.mutate))
    return rep


def _verify_norms(args):
    _case_range("norms", args.case, args.n)
    _check_range(args.max_size, (0, zonal.MAX_NORM_SIZE), "max-size")
    rep = Report()
    for mu in macdonald.partitions_up_to(args.max_size, args.n):
        rep.extend(zonal.verify_norm_identity(args.case, mu, args.n, args.mutate))
    return rep


def _verify_rank_one(args):
    _check_range(args.max_ell, (0, 12), "max-ell")
    return zonal.verify_rank_one(args.max_ell, args.mutate)


def _verify_series(args):
    _check_range(args.n, (2, 2), "n")
    _check_range(args.K, (0, zonal.MAX_K), "K")
    _check_range(args.max_size, (0, 3), "max-size")
    rep = zonal.verify_orthogonality(args.case, args.n, args.max_size, args.K, args.mutate)
    return rep.extend(zonal.verify_series_norms(args.case, args.n, args.max_size, args.K, args.mutate))


def _oracle_gram_schmidt(args):
    _check_range(args.n, (2, 2), "n")
    _check_range(args.degree, (0, 3), "degree")
    _check_range(args.K, (0, zonal.MAX_K), "K")
    return zonal.verify_gram_schmidt(args.case, args.n, args.degree, args.K, args.mutate)


# verb: (handler, mutation ids, arguments, aliases, help)
VERIFY = {
    "ybe": (_verify_ybe, qmatrix.YBE_MUTATIONS, ["N"], [], "Yang-Baxter equation and R-matrix identities"),
    "reflection": (_verify_reflection, qmatrix.REFLECTION_MUTATIONS, ["case", "n"], [], "reflection equation for J(a)"),
    "xalg": (_verify_xalg, ncalg.STRAIGHTEN_MUTATIONS, ["case", "n"], [], "relations of X = T J T^t"),
    "restrictions": (
        _verify_restrictions, {"drop-weight"} | ncalg.STRAIGHTEN_MUTATIONS, ["case", "n"], [],
        "torus restrictions of the fundamental zonal functions",
    ),
    "pfaffian": (_verify_pfaffian, ncalg.checks.PFAFFIAN_MUTATIONS, ["n"], [], "quantum Pfaffian identity"),
    "rtt": (_verify_rtt, ncalg.STRAIGHTEN_MUTATIONS, ["N"], [], "RTT relations and centrality of det_q"),
    "associativity": (
        _verify_associativity, ncalg.STRAIGHTEN_MUTATIONS, ["N", "trials", "max_degree", "seed"], [],
        "random associativity fuzz of the normal-ordered product",
    ),
    "gk": (_verify_gk, qmatrix.GK_MUTATIONS, ["n"], [], "cubic coideal relations in the vector representation"),
    "vector-rep": (_verify_vector_rep, qmatrix.VECTOR_REP_MUTATIONS, ["N"], [], "vector representation from the R-matrix"),
    "triangular": (_verify_triangular, qmatrix.TRIANGULAR_MUTATIONS, ["n"], ["sec54"], "triangular matrix calculus"),
    "projections": (
        _verify_projections, qmatrix.PROJECTION_MUTATIONS, ["case", "n"], ["lemma56"],
        "projection of the twisted R-matrix onto the diagonal subspace",
    ),
    "zonal": (_verify_zonal, zonal.RADIAL_MUTATIONS, ["case", "n", "mu", "ell"], [], "radial eigen-equation"),
    "norms": (_verify_norms, zonal.NORM_MUTATIONS, ["case", "n", "max_size"], [], "c(lambda)^2 / d(lambda) norm identity"),
    "rank-one": (_verify_rank_one, zonal.RANK_ONE_MUTATIONS, ["max_ell"], [], "rank-one fixed vector recurrence"),
    "series": (
        _verify_series, zonal.SERIES_MUTATIONS, ["case", "n_series", "K", "max_size_series"], [],
        "q-series orthogonality and norm ratios",
    ),
}


def _add_common(p):
    p.add_argument("--format", choices=["json", "csv", "pretty"], default=None)
    p.add_argument("--output", "-o", default=None, help=f"output file (relative paths go under ${OUTPUT_DIR_ENV})")


def _add_arg(p, name):
    if name == "case":
        p.add_argument("--case", type=_case, required=True)
    elif name == "n":
        p.add_argument("--n", type=int, required=True)
    elif name == "n_series":
        p.add_argument("--n", type=int, default=2)
    elif name == "mu":
        p.add_argument("--mu", type=_partition, default=None, help="partition, e.g. 2,1 or 21")
    elif name == "ell":
        p.add_argument("--ell", type=int, default=0)
    elif name == "max_size":
        p.add_argument("--max-size", type=int, default=zonal.MAX_NORM_SIZE)
    elif name == "max_size_series":
        p.add_argument("--max-size", type=int, default=3)
    elif name == "max_ell":
        p.add_argument("--max-ell", type=int, default=9)
    elif name == "K":
        p.add_argument("--K", type=int, default=zonal.DEFAULT_K)
    elif name == "trials":
        p.add_argument("--trials", type=int, default=200)
    elif name == "max_degree":
        p.add_argument("--max-degree", type=int, default=3)
    elif name == "seed":
        p.add_argument("--seed", type=int, default=0)


def build_parser():
    parser = argparse.ArgumentParser(prog="qzonal", description="Exact identity checks for quantum zonal spherical functions.")
    top = parser.add_subparsers(dest="command", required=True)

    verify = top.add_parser("verify", help="run an identity verifier")
    vsub = verify.add_subparsers(dest="verb", required=True)
    for verb, (handler, mutations, names, aliases, help_text) in VERIFY.items():
        p = vsub.add_parser(verb, aliases=aliases, help=help_text)
        for name in names:
            if name == "N":
                p.add_argument("--N", type=int, required=verb != "associativity", default=3)
            else:
                _add_arg(p, name)
        p.add_argument("--mutate", choices=sorted(mutations), default=None,
                       help="apply a single-coefficient mutation; the report should then fail")
        _add_common(p)
        p.set_defaults(handler=handler, kind="report")

    mac = top.add_parser("macdonald", help="Macdonald polynomial computations")
    msub = mac.add_subparsers(dest="verb", required=True)
    p = msub.add_parser("compute", help="P_mu on the monomial basis")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_macdonald_compute, kind="data")
    p = msub.add_parser("norm", help="principal specialization and norm ratio")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_macdonald_norm, kind="data")

    oracle = top.add_parser("oracle", help="independent series oracles")
    osub = oracle.add_subparsers(dest="verb", required=True)
    p = osub.add_parser("gram-schmidt", help="orthogonalise the monomial basis under the series scalar product")
    p.add_argument("--case", type=_case, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--K", type=int, default=zonal.DEFAULT_K)
    p.add_argument("--mutate", choices=sorted(zonal.SERIES_MUTATIONS), default=None)
    _add_common(p)
    p.set_defaults(handler=_oracle_gram_schmidt, kind="report")

    tables = top.add_parser("tables", help="tables of closed-form values")
    tsub = tables.add_subparsers(dest="verb", required=True)
    p = tsub.add_parser("norms", help="c(lambda), d(lambda) and the norm ratio per partition")
    p.add_argument("--case", type=_case, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-size", type=int, default=zonal.MAX_NORM_SIZE)
    _add_common(p)
    p.set_defaults(handler=_tables_norms, kind="table")
    return parser


# data handlers -----------------------------------------------------------------

def _mac_check(args):
    if args.n < 1 or args.n > 4:
        raise UsageError("n must be in 1..4")
    if len(args.mu) > args.n:
        raise UsageError(f"mu = {args.mu} has more than n = {args.n} parts")
    if args.mu.size > 6:
        raise UsageError("|mu| must be at most 6")


def _macdonald_compute(args):
    _mac_check(args)
    P = macdonald.macdonald_p(args.mu, args.n)
    rows = [{"partition": list(nu), "coeff": str(c)} for nu, c in P.sorted_items()]
    return {"mu": list(args.mu), "n": args.n, "coefficients": rows}


def _macdonald_norm(args):
    _mac_check(args)
    return {
        "mu": list(args.mu),
        "n": args.n,
        "norm_ratio": str(macdonald.norm_ratio_formula(args.mu, args.n)),
        "principal_specialization": str(macdonald.principal_specialization_formula(args.mu, args.n)),
    }


TABLE_COLUMNS = ["case", "mu", "n", "c_lambda", "d_lambda", "ratio", "formula_ratio", "equal"]


def _tables_norms(args):
    _case_range("norms", args.case, args.n)
    _check_range(args.max_size, (0, zonal.MAX_NORM_SIZE), "max-size")
    return [zonal.norm_table_row(args.case, mu, args.n) for mu in macdonald.partitions_up_to(args.max_size, args.n)]


# rendering ---------------------------------------------------------------------

def _render_report(rep, fmt):
    if fmt == "json":
        return json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity_id", "parameters", "status", "counterexample_cell"])
        for c in rep:
            cell = "" if c.counterexample_cell is None else json.dumps(c.counterexample_cell, sort_keys=True)
            w.writerow([c.identity_id, json.dumps(c.parameters, sort_keys=True), c.status, cell])
        return buf.getvalue()
    lines = []
    for c in rep:
        params = " ".join(f"{k}={v}" for k, v in sorted(c.parameters.items()))
        extra = "" if c.counterexample_cell is None else f"  at {c.counterexample_cell}"
        lines.append(f"{c.status.upper():4}  {c.identity_id}  {params}{extra}")
    passed = sum(c.passed for c in rep)
    lines.append(f"{passed}/{len(rep)} identities hold")
    return "\n".join(lines) + "\n"


def _render_table(rows, fmt):
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: str(r[k]).lower() if k == "equal" else r[k] for k in TABLE_COLUMNS})
        return buf.getvalue()
    return "".join(" | ".join(str(r[k]) for k in TABLE_COLUMNS) + "\n" for r in rows)


def _render_data(data, fmt):
    if fmt == "csv":
        raise UsageError("csv output is only available for reports and tables")
    if fmt == "pretty":
        lines = [f"mu = {data['mu']}, n = {data['n']}"]
        for k, v in data.items():
            if k in ("mu", "n"):
                continue
            if isinstance(v, list):
                lines.extend(f"  m{r['partition']}: {r['coeff']}" for r in v)
            else:
                lines.append(f"  {k}: {v}")
        return "\n".join(lines) + "\n"
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _default_name(args):
    return f"{args.command}-{args.verb}"


def _write(text, args, fmt):
    target = args.output
    base = os.environ.get(OUTPUT_DIR_ENV)
    if target is None and base:
        target = f"{_default_name(args)}.{'txt' if fmt == 'pretty' else fmt}"
    if target is None:
        sys.stdout.write(text)
        return
    if base and not os.path.isabs(target):
        target = os.path.join(base, target)
    os.makedirs(os.path.dirname(target) or ".", exist_ok=True)
    with open(target, "w", encoding="utf-8") as fh:
        fh.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format or ("csv" if args.kind == "table" else "json")
    try:
        result = args.handler(args)
        if args.kind == "report":
            text, code = _render_report(result, fmt), 0 if result.ok else 1
        elif args.kind == "table":
            text, code = _render_table(result, fmt), 0 if all(r["equal"] for r in result) else 1
        else:
            text, code = _render_data(result, fmt), 0
    except (UsageError, MutationError) as exc:
        parser.print_usage(sys.stderr)
        print(f"qzonal: error: {exc}", file=sys.stderr)
        return 2
    _write(text, args, fmt)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
