"""The rank-one fixed vector: a three-term recurrence solved as a linear system.

Unknowns c_0 .. c_ell over Q(q, a) with c_0 = 1 and, for 0 <= j <= ell,

    a q^(-ell + 2j + 2) [j + 1] c_(j+1) = [ell - j + 1] c_(j-1),   c_-1 = c_(ell+1) = 0.
"""
from __future__ import annotations

from ..exactfield import Inconsistent, q_int, q_pochhammer, rational_field, solve
from ..report import Report, check_mutation


class NoSolution:
    """Marker returned when the recurrence system is inconsistent."""

    def __init__(self, ell, reason):
        self.ell = ell
        self.reason = reason

    def __bool__(self):
        return False

    def __repr__(self):
        return f"NoSolution(ell={self.ell})"


def rank_one_field():
    return rational_field("q", "a")


def recurrence_system(ell, field=None, scale=1):
    """(rows, rhs) for the recurrence plus the normalisation c_0 = 1.

    ``scale`` multiplies the left-hand coefficient (mutation hook).
    """
    field = field or rank_one_field()
    q, a = field.gens("q", "a")
    rows, rhs = [], []
    for j in range(ell + 1):
        row = [field.zero] * (ell + 1)
        if j + 1 <= ell:
            row[j + 1] = a * q ** (-ell + 2 * j + 2) * q_int(j + 1, q) * scale
        if j - 1 >= 0:
            row[j - 1] = row[j - 1] - q_int(ell - j + 1, q)
        rows.append(row)
        rhs.append(field.zero)
    norm = [field.zero] * (ell + 1)
    norm[0] = field.one
    rows.append(norm)
    rhs.append(field.one)
    return rows, rhs


def closed_form(ell, field=None):
    """c_2k = (-1)^k a^-k q^(2k(ell-k)) (q^-2ell; q^4)_k / (q^4; q^4)_k, odd entries zero."""
    field = field or rank_one_field()
    q, a = field.gens("q", "a")
    out = []
    for j in range(ell + 1):
        if j % 2:
            out.append(field.zero)
            continue
        k = j // 2
        c = (-1) ** k * a ** (-k) * q ** (2 * k * (ell - k))
        out.append(c * q_pochhammer(q ** (-2 * ell), q**4, k) / q_pochhammer(q**4, q**4, k))
    return out


def rank_one_fixed_vector(ell, field=None, scale=1):
    """[c_0 .. c_ell] or NoSolution; the solution is unique when it exists."""
    if ell < 0:
        raise ValueError("need ell >= 0")
    field = field or rank_one_field()
    rows, rhs = recurrence_system(ell, field, scale)
    try:
        x, free = solve(rows, rhs, field)
    except Inconsistent as exc:
        return NoSolution(ell, str(exc))
    if free:
        raise ArithmeticError(f"recurrence for ell = {ell} leaves c_{free} undetermined")
    return x


# scale-step: multiply the c_(j+1) coefficient of the recurrence by 2.
RANK_ONE_MUTATIONS = {"scale-step"}


def verify_rank_one(max_ell=9, mutation=None):
    """Even ell: the solution equals the closed form.  Odd ell: no solution exists."""
    check_mutation(mutation, RANK_ONE_MUTATIONS)
    field = rank_one_field()
    scale = 2 if mutation == "scale-step" else 1
    rep = Report()
    for ell in range(max_ell + 1):
        sol = rank_one_fixed_vector(ell, field, scale)
        if ell % 2:
            rep.add("rank-one-odd-no-solution", {"ell": ell}, isinstance(sol, NoSolution))
            continue
        if isinstance(sol, NoSolution):
            rep.add("rank-one-closed-form", {"ell": ell}, False, "no solution")
            continue
        expected = closed_form(ell, field)
        bad = next((j for j in range(ell + 1) if sol[j] != expected[j]), None)
        rep.add("rank-one-closed-form", {"ell": ell}, bad is None, bad)
    return rep
