"""The qzonal command line: verbs, formats, exit codes and output files."""
import json
import subprocess
import sys

import pytest

from qzonal.cli import VERIFY, run
from qzonal.exactfield import rational_field

# one failing mutation per verify verb, with small arguments
MUTATION_RUNS = {
    "ybe": ["--N", "2", "--mutate", "zero-offdiag"],
    "reflection": ["--case", "so", "--n", "2", "--mutate", "j-plus-e21"],
    "xalg": ["--case", "so", "--n", "2", "--mutate", "row-q2"],
    "restrictions": ["--case", "so", "--n", "2", "--mutate", "drop-weight"],
    "pfaffian": ["--n", "1", "--mutate", "sign-flip"],
    "rtt": ["--N", "2", "--mutate", "row-q2"],
    "associativity": ["--trials", "20", "--mutate", "row-q2"],
    "gk": ["--n", "3", "--mutate", "drop-rhs"],
    "vector-rep": ["--N", "3", "--mutate", "scale-e1"],
    "triangular": ["--n", "2", "--mutate", "a-offdiag"],
    "projections": ["--case", "sp", "--n", "1", "--mutate", "drop-q"],
    "zonal": ["--case", "so", "--n", "2", "--mu", "2", "--mutate", "swap-params"],
    "norms": ["--case", "so", "--n", "2", "--max-size", "2", "--mutate", "swap-params"],
    "rank-one": ["--max-ell", "4", "--mutate", "scale-step"],
    "series": ["--case", "so", "--K", "12", "--max-size", "2", "--mutate", "drop-denominator"],
}


def call(argv, capsys):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_every_verify_verb_has_a_mutation_run():
    assert set(MUTATION_RUNS) == set(VERIFY)


@pytest.mark.parametrize("verb", sorted(MUTATION_RUNS))
def test_verify_verbs_pass_and_mutations_fail(verb, capsys):
    args = MUTATION_RUNS[verb]
    clean = args[: args.index("--mutate")]
    code, out, _ = call(["verify", verb, *clean], capsys)
    assert code == 0, out
    assert all(c["status"] == "pass" for c in json.loads(out))
    code, out, _ = call(["verify", verb, *args], capsys)
    assert code == 1
    assert any(c["status"] == "fail" for c in json.loads(out))


def test_ybe_example(capsys):
    code, out, _ = call(["verify", "ybe", "--N", "3"], capsys)
    data = json.loads(out)
    assert code == 0
    assert {c["identity_id"]: c["status"] for c in data}["ybe+"] == "pass"
    assert {c["identity_id"]: c["status"] for c in data}["ybe-"] == "pass"


@pytest.mark.parametrize("argv", [["verify", "sec54", "--n", "2"], ["verify", "lemma56", "--case", "so", "--n", "2"]])
def test_legacy_aliases(argv, capsys):
    code, out, _ = call(argv, capsys)
    assert code == 0 and json.loads(out)


def test_macdonald_compute_example(capsys):
    code, out, _ = call(["macdonald", "compute", "--mu", "2", "--n", "2"], capsys)
    data = json.loads(out)
    assert code == 0
    coeffs = {tuple(r["partition"]): r["coeff"] for r in data["coefficients"]}
    assert coeffs[(2,)] == "1"
    K = rational_field("q", "t")
    q, t = K.gens("q", "t")
    assert str((1 - t) * (1 + q) / (1 - q * t)) == coeffs[(1, 1)]


def test_macdonald_norm(capsys):
    code, out, _ = call(["macdonald", "norm", "--mu", "1", "--n", "1"], capsys)
    assert code == 0 and json.loads(out)["norm_ratio"] == "1"


@pytest.mark.parametrize("argv", [
    ["verify", "zonal", "--case", "sp", "--n", "9", "--mu", "1"],
    ["verify", "zonal", "--case", "so", "--n", "1", "--mu", "2,1"],
    ["verify", "ybe", "--N", "3", "--mutate", "nope"],
    ["verify", "bogus"],
    ["verify", "reflection", "--case", "xx", "--n", "2"],
    ["macdonald", "compute", "--mu", "1,2", "--n", "2"],
    ["macdonald", "compute", "--mu", "2", "--n", "2", "--format", "csv"],
    ["tables", "norms", "--case", "so", "--n", "2", "--max-size", "9"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = call(argv, capsys)
    assert code == 2
    assert err


def test_tables_norms_csv(capsys):
    code, out, _ = call(["tables", "norms", "--case", "sp", "--n", "2", "--max-size", "2"], capsys)
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "case,mu,n,c_lambda,d_lambda,ratio,formula_ratio,equal"
    assert len(lines) == 1 + 4 and all(line.endswith("true") for line in lines[1:])


def test_oracle_gram_schmidt(capsys):
    code, out, _ = call(["oracle", "gram-schmidt", "--case", "sp", "--degree", "2", "--K", "20"], capsys)
    assert code == 0 and len(json.loads(out)) == 2
    code, _, _ = call(["oracle", "gram-schmidt", "--case", "sp", "--degree", "2", "--mutate", "drop-denominator"], capsys)
    assert code == 1


@pytest.mark.parametrize("fmt", ["json", "csv", "pretty"])
def test_formats_are_deterministic(fmt, capsys):
    argv = ["verify", "norms", "--case", "so", "--n", "2", "--max-size", "2", "--format", fmt]
    _, first, _ = call(argv, capsys)
    _, second, _ = call(argv, capsys)
    assert first == second and first


def test_csv_report_columns(capsys):
    _, out, _ = call(["verify", "ybe", "--N", "2", "--format", "csv"], capsys)
    assert out.splitlines()[0] == "identity_id,parameters,status,counterexample_cell"


def test_output_file_and_env_directory(tmp_path, monkeypatch, capsys):
    target = tmp_path / "r.json"
    assert run(["verify", "ybe", "--N", "2", "--output", str(target)]) == 0
    assert json.loads(target.read_text())
    monkeypatch.setenv("QZONAL_OUTPUT_DIR", str(tmp_path / "out"))
    assert run(["verify", "ybe", "--N", "2"]) == 0
    assert json.loads((tmp_path / "out" / "verify-ybe.json").read_text())
    assert run(["verify", "ybe", "--N", "2", "-o", "named.csv", "--format", "csv"]) == 0
    assert (tmp_path / "out" / "named.csv").read_text().startswith("identity_id")
    assert capsys.readouterr().out == ""


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qzonal", "verify", "rank-one", "--max-ell", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)
