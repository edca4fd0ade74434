"""q-integers, q-shifted factorials and friends, all exact."""
from __future__ import annotations

from .field import RationalFunction


def q_pochhammer(a: RationalFunction, base: RationalFunction, k: int) -> RationalFunction:
    """(a; base)_k = (1 - a)(1 - a base) ... (1 - a base^(k-1))."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    field = a.field if isinstance(a, RationalFunction) else base.field
    result = field.one
    term = field(a)
    for _ in range(k):
        result = result * (1 - term)
        term = term * base
    return result


def q_int(j: int, q: RationalFunction) -> RationalFunction:
    """Symmetric q-integer [j] = (q^j - q^-j)/(q - q^-1)."""
    return (q ** j - q ** (-j)) / (q - q ** (-1))


def q_factorial(r: int, base: RationalFunction) -> RationalFunction:
    """[r]_base! = (base; base)_r / (1 - base)^r."""
    return q_pochhammer(base, base, r) / (1 - base) ** r
