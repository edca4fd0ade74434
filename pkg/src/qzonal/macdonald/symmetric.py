"""Symmetric polynomials in n variables on the monomial basis m_mu."""
from __future__ import annotations

from itertools import permutations

from ..exactfield import RationalFunction, rational_field, substitute
from .partitions import Partition, parse_partition


def x_names(n):
    return tuple(f"x{k}" for k in range(1, n + 1))


def monomial_exponents(mu, n):
    """Distinct rearrangements of mu padded to n entries (sorted)."""
    return sorted(set(permutations(Partition(mu).padded(n))))


class NotSymmetric(ValueError):
    """A monomial expansion whose coefficients are not permutation invariant."""


class SymmetricPolynomial:
    """sum_mu c_mu m_mu(x_1..x_n) with coefficients in a RationalField."""

    __slots__ = ("n", "field", "coeffs")

    def __init__(self, n, field, coeffs=None):
        self.n = n
        self.field = field
        out = {}
        for mu, c in (coeffs or {}).items():
            mu = parse_partition(mu)
            if len(mu) > n:
                raise ValueError(f"{tuple(mu)} has more than n = {n} parts")
            c = field(c)
            if not c.is_zero():
                out[mu] = c
        self.coeffs = out

    @classmethod
    def monomial(cls, mu, n, field=None):
        field = field or rational_field("q", "t")
        return cls(n, field, {Partition(mu): 1})

    @classmethod
    def from_monomials(cls, n, field, terms):
        """Collect {exponent tuple: coefficient} onto the m-basis, checking symmetry."""
        out = {}
        for e, c in terms.items():
            c = field(c)
            if c.is_zero():
                continue
            mu = Partition(sorted(e, reverse=True))
            if mu in out:
                if out[mu] != c:
                    raise NotSymmetric(f"coefficients of {e} and its rearrangement differ")
            else:
                out[mu] = c
        for mu, c in out.items():
            for e in monomial_exponents(mu, n):
                if field(terms.get(e, 0)) != c:
                    raise NotSymmetric(f"monomial {e} missing from the orbit of {tuple(mu)}")
        return cls(n, field, out)

    def to_monomials(self):
        out = {}
        for mu, c in self.coeffs.items():
            for e in monomial_exponents(mu, self.n):
                out[e] = c
        return out

    def degree(self):
        return max((mu.size for mu in self.coeffs), default=0)

    def is_homogeneous(self):
        return len({mu.size for mu in self.coeffs}) <= 1

    def coefficient(self, mu):
        return self.coeffs.get(parse_partition(mu), self.field.zero)

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (-kv[0].size, tuple(-p for p in kv[0])))

    def _check(self, other):
        if not isinstance(other, SymmetricPolynomial):
            return NotImplemented
        if other.n != self.n or other.field is not self.field:
            raise ValueError("symmetric polynomials over different n or fields")
        return other

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out[mu] + c if mu in out else c
        return SymmetricPolynomial(self.n, self.field, out)

    def __neg__(self):
        return SymmetricPolynomial(self.n, self.field, {mu: -c for mu, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return SymmetricPolynomial(self.n, self.field, {mu: v * c for mu, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, SymmetricPolynomial):
            return self.scale(other)
        self._check(other)
        a, b = self.to_monomials(), other.to_monomials()
        prod = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = c1 * c2
                prod[e] = prod[e] + v if e in prod else v
        return SymmetricPolynomial.from_monomials(self.n, self.field, prod)

    def __eq__(self, other):
        if not isinstance(other, SymmetricPolynomial):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def is_zero(self):
        return not self.coeffs

    def map_coefficients(self, fn, field=None):
        field = field or self.field
        return SymmetricPolynomial(self.n, field, {mu: fn(c) for mu, c in self.coeffs.items()})

    def substitute_params(self, bindings, field=None):
        """Substitute coefficient parameters, e.g. {'q': q**4, 't': q**2}."""
        target = field
        if target is None:
            for v in bindings.values():
                if isinstance(v, RationalFunction):
                    target = v.field
                    break
            else:
                target = self.field
        return self.map_coefficients(lambda c: substitute(c, bindings, target), target)

    def evaluate(self, point, field=None):
        """Value at x = point (a sequence of field elements or numbers)."""
        if len(point) != self.n:
            raise ValueError(f"need {self.n} values")
        field = field or self.field
        total = field.zero
        values = [field(v) for v in point]
        for mu, c in self.coeffs.items():
            m = field.zero
            for e in monomial_exponents(mu, self.n):
                term = field.one
                for v, k in zip(values, e):
                    if k:
                        term = term * v**k
                m = m + term
            total = total + field(c) * m
        return total

    def to_function(self, field, xs=None, params=None):
        """sum c_mu m_mu(xs) as a rational function in ``field``.

        ``params`` optionally substitutes coefficient parameters on the way.
        """
        xs = xs if xs is not None else [field.gen(v) for v in x_names(self.n)]
        total = field.zero
        for mu, c in self.coeffs.items():
            c = substitute(c, params, field) if params else field(c)
            m = field.zero
            for e in monomial_exponents(mu, self.n):
                term = field.one
                for v, k in zip(xs, e):
                    if k:
                        term = term * v**k
                m = m + term
            total = total + c * m
        return total

    def set_variable_zero(self):
        """Restriction x_n -> 0 as a polynomial in n - 1 variables."""
        return SymmetricPolynomial(
            self.n - 1, self.field, {mu: c for mu, c in self.coeffs.items() if len(mu) <= self.n - 1}
        )

    def to_json(self):
        return [{"partition": list(mu), "coeff": c.to_json()} for mu, c in self.sorted_items()]

    def to_display(self):
        return {str(mu) if mu else "()": str(c) for mu, c in self.sorted_items()}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for mu, c in self.sorted_items():
            name = f"m[{','.join(map(str, mu))}]"
            parts.append(name if c.is_one() else f"({c})*{name}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymmetricPolynomial(n={self.n}: {self})"
