"""Normal ordering in A_q(Mat(N)), quantum minors, X = T J T^t and the Pfaffian."""
import random
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qzonal.exactfield import rational_field
from qzonal.ncalg import (
    QuantumMatrixAlgebra,
    associativity_fuzz,
    centrality_check,
    phi_fundamental,
    quantum_matrix_algebra,
    quantum_pfaffian_check,
    restrict_to_torus,
    verify_phi_restrictions,
    verify_rtt,
    verify_x_relations,
    x_entries,
)
from qzonal.ncalg.checks import random_element
from sympy_bridge import to_sympy

Fq = rational_field("q")
q = Fq.gen("q")


def naive_normal_form(word, N):
    """Rewrite a word of (i, j) pairs by always fixing the leftmost inversion.

    Independent of the library: works on explicit words with sympy
    coefficients and no memoisation.
    """
    qs = sympy.Symbol("q")
    todo = [(sympy.Integer(1), tuple(word))]
    done = {}
    while todo:
        c, w = todo.pop()
        pos = next((p for p in range(len(w) - 1) if w[p] > w[p + 1]), None)
        if pos is None:
            done[w] = sympy.expand(done.get(w, 0) + c)
            continue
        (k, l), (i, j) = w[pos], w[pos + 1]
        head, tail = w[:pos], w[pos + 2:]
        if k == i:
            todo.append((c / qs, head + ((i, j), (k, l)) + tail))
        elif l == j:
            todo.append((c / qs, head + ((i, j), (k, l)) + tail))
        elif l < j:
            todo.append((c, head + ((i, j), (k, l)) + tail))
        else:
            todo.append((c, head + ((i, j), (k, l)) + tail))
            todo.append((-c * (qs - 1 / qs), head + ((i, l), (k, j)) + tail))
    return {w: sympy.simplify(v) for w, v in done.items() if sympy.simplify(v) != 0}


def as_sympy(p):
    qs = sympy.Symbol("q")
    out = {}
    for mono, c in p.terms.items():
        word = tuple(p.algebra.position(g) for g in mono)
        out[word] = sympy.simplify(to_sympy(c, {"q": qs}))
    return out


def test_straightening_examples():
    A = quantum_matrix_algebra(2)
    t = A.t
    assert t(2, 2) * t(1, 1) == t(1, 1) * t(2, 2) - (t(1, 2) * t(2, 1)).scale(q - 1 / q)
    assert (t(1, 2) * t(1, 1)).coefficient([(1, 1), (1, 2)]) == 1 / q
    p = t(2, 1) * t(1, 2) + t(2, 2)
    assert A.one() * p == p


@pytest.mark.parametrize("seed", range(6))
def test_normal_form_matches_naive_rewriter(seed):
    rng = random.Random(seed)
    N = 3
    A = quantum_matrix_algebra(N)
    word = [(rng.randint(1, N), rng.randint(1, N)) for _ in range(5)]
    assert as_sympy(A.monomial(word)) == naive_normal_form(word, N)


def test_minor_examples():
    A2 = quantum_matrix_algebra(2)
    t = A2.t
    assert A2.quantum_minor((1, 2), (1, 2)) == t(1, 1) * t(2, 2) - (t(1, 2) * t(2, 1)).scale(q)
    assert A2.quantum_minor((1,), (2,)) == t(1, 2)
    A3 = quantum_matrix_algebra(3)
    t = A3.t
    assert A3.quantum_minor((1, 2), (1, 3)) == t(1, 1) * t(2, 3) - (t(1, 3) * t(2, 1)).scale(q)
    with pytest.raises(ValueError):
        A3.quantum_minor((1, 2), (1,))


@pytest.mark.parametrize("I,J", [((1, 2), (2, 3)), ((1, 3), (1, 2)), ((1, 2, 3), (1, 2, 3))])
def test_minor_at_q_one_is_classical(I, J):
    A = quantum_matrix_algebra(3)
    m = A.quantum_minor(I, J)
    T = sympy.Matrix(3, 3, lambda i, j: sympy.Symbol(f"t{i + 1}{j + 1}"))
    classical = T.extract([i - 1 for i in I], [j - 1 for j in J]).det()
    total = 0
    for mono, c in m.terms.items():
        term = c.substitute({"q": 1}).as_fraction()
        for g in mono:
            i, j = A.position(g)
            term = term * sympy.Symbol(f"t{i}{j}")
        total += term
    assert sympy.expand(total - classical) == 0


def test_x_entry_examples():
    X = x_entries("SO", 2)
    A = X[0][0].algebra
    a1, a2 = A.field.gens("a1", "a2")
    assert X[0][0] == (A.t(1, 1) * A.t(1, 1)).scale(a1) + (A.t(1, 2) * A.t(1, 2)).scale(a2)
    X = x_entries("Sp", 1)
    A = X[0][0].algebra
    a1, qq = A.field.gens("a1", "q")
    assert X[0][1] == A.qdet().scale(a1)
    assert X[0][0].is_zero()


def test_torus_restriction_examples():
    A = quantum_matrix_algebra(3)
    r = restrict_to_torus(A.qdet())
    z1, z2, z3 = r.field.gens("z1", "z2", "z3")
    assert r == z1 * z2 * z3
    assert restrict_to_torus(A.quantum_minor((1, 2), (1, 3))).is_zero()
    X = x_entries("SO", 2)
    r = restrict_to_torus(X[0][0])
    assert r == r.field.gen("z1") ** 2 * r.field.gen("a1")


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_torus_restriction_is_multiplicative(seed):
    rng = random.Random(seed)
    A = quantum_matrix_algebra(3)
    p, r = random_element(A, rng, 3), random_element(A, rng, 3)
    assert restrict_to_torus(p * r) == restrict_to_torus(p) * restrict_to_torus(r)


def test_phi_examples():
    phi0 = phi_fundamental("SO", 2, 1, "phi0")
    A = phi0.algebra
    a1, a2 = A.field.gens("a1", "a2")
    assert phi0 == (A.t(1, 1) ** 2).scale(a1 / a1) + (A.t(1, 2) ** 2).scale(a2 / a1)
    phi = phi_fundamental("Sp", 1, 1, "phi")
    B = phi.algebra
    assert phi == B.qdet()
    r = restrict_to_torus(phi)
    assert r == r.field.gen("z1") * r.field.gen("z2")


@pytest.mark.parametrize("case,n", [("SO", 2), ("SO", 3), ("Sp", 1), ("Sp", 2)])
def test_phi_restrictions(case, n):
    assert verify_phi_restrictions(case, n).ok


@pytest.mark.parametrize("case,n", [("SO", 2), ("SO", 3), ("Sp", 1), ("Sp", 2)])
def test_x_relations(case, n):
    rep = verify_x_relations(case, n)
    assert rep.ok, rep.to_json()


def test_x_relations_mutation_detected():
    assert not verify_x_relations("SO", 2, "row-q2").ok


@pytest.mark.parametrize("N", [2, 3, 4])
def test_rtt(N):
    assert verify_rtt(N).ok


def test_rtt_mutation_detected():
    assert not verify_rtt(2, "cross-drop").ok


@pytest.mark.parametrize("n", [1, 2])
def test_pfaffian(n):
    assert quantum_pfaffian_check(n).ok
    assert not quantum_pfaffian_check(n, "sign-flip").ok


def test_pfaffian_sum_sign_needs_two_pairs():
    # only the identity permutation contributes at n = 1
    assert quantum_pfaffian_check(1, "sum-sign-flip").ok
    assert not quantum_pfaffian_check(2, "sum-sign-flip").ok


@pytest.mark.parametrize("N", [2, 3])
def test_centrality(N):
    assert centrality_check(N).ok


def test_centrality_mutation_detected():
    assert not centrality_check(2, "cross-drop").ok


def test_associativity_small():
    assert associativity_fuzz(N=3, trials=20, seed=7).ok


def test_associativity_mutation_detected():
    assert not associativity_fuzz(N=3, trials=50, seed=1, mutation="cross-q2").ok
