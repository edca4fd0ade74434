"""Multivariate Laurent polynomials with exact rational coefficients.

A ``MultiLaurent`` is an immutable mapping from signed exponent tuples to
rational coefficients over a fixed, named variable set.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


def _norm_coeff(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm_coeff(Fraction(c.numerator, c.denominator))
    # flint fmpq / fmpz and friends
    if hasattr(c, "p") and hasattr(c, "q"):
        return _norm_coeff(Fraction(int(c.p), int(c.q)))
    return _norm_coeff(Fraction(int(c)))


def grlex_key(exp):
    """Sort key for graded-lexicographic order (larger key = larger term)."""
    return (sum(exp), tuple(exp))


class VariableMismatch(ValueError):
    """Raised when values over different variable sets are combined."""


class MultiLaurent:
    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping | None = None):
        self.variables = tuple(variables)
        nv = len(self.variables)
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != nv:
                    raise VariableMismatch(f"exponent {exp} does not fit {self.variables}")
                c = _norm_coeff(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._terms = terms
        obj._hash = None
        return obj

    # construction helpers
    @classmethod
    def constant(cls, variables, c=1):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables, exps, c=1):
        variables = tuple(variables)
        if isinstance(exps, Mapping):
            exps = tuple(exps.get(v, 0) for v in variables)
        return cls(variables, {tuple(exps): c})

    @classmethod
    def gen(cls, variables, name):
        variables = tuple(variables)
        return cls.monomial(variables, {name: 1})

    # basic access
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), 0)

    def constant_term(self):
        return self._terms.get((0,) * len(self.variables), 0)

    def is_monomial(self):
        return len(self._terms) == 1

    def min_exponents(self):
        if not self._terms:
            return (0,) * len(self.variables)
        return tuple(min(e[i] for e in self._terms) for i in range(len(self.variables)))

    def max_exponents(self):
        if not self._terms:
            return (0,) * len(self.variables)
        return tuple(max(e[i] for e in self._terms) for i in range(len(self.variables)))

    def _check(self, other):
        if self.variables != other.variables:
            raise VariableMismatch(f"{self.variables} vs {other.variables}")

    def _coerce(self, other):
        if isinstance(other, MultiLaurent):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiLaurent.constant(self.variables, other)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiLaurent._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiLaurent._raw(self.variables, {})
            return MultiLaurent._raw(self.variables, {e: _norm_coeff(c * other) for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MultiLaurent._raw(self.variables, {e: _norm_coeff(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            return MultiLaurent(self.variables, {tuple(x * k for x in e): Fraction(1) / Fraction(c) ** -k})
        result = MultiLaurent.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiLaurent):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiLaurent.constant(self.variables, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # transformations
    def map_exponents(self, fn):
        """Apply ``fn`` to each exponent tuple (must stay injective or terms are merged)."""
        out = {}
        for e, c in self._terms.items():
            e2 = tuple(fn(e))
            v = out.get(e2, 0) + c
            if v:
                out[e2] = v
            else:
                out.pop(e2, None)
        return MultiLaurent._raw(self.variables, out)

    def invert_variables(self):
        """x_i -> 1/x_i for every variable."""
        return self.map_exponents(lambda e: tuple(-x for x in e))

    def evaluate(self, point: Mapping):
        """Evaluate at values supporting +, * and integer powers."""
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(self.variables, e):
                if k:
                    term = term * point[v] ** k
            total = total + term
        return total

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def to_json(self):
        out = []
        for e, c in self.sorted_terms():
            c = Fraction(c)
            out.append({"exp": list(e), "coeff": [c.numerator, c.denominator]})
        return {"vars": list(self.variables), "terms": out}

    @classmethod
    def from_json(cls, data):
        return cls(data["vars"], {tuple(t["exp"]): Fraction(*t["coeff"]) for t in data["terms"]})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiLaurent({self})"
