"""Power series in q truncated at a fixed order, with Laurent-polynomial coefficients."""
from __future__ import annotations

from fractions import Fraction

from .field import RationalFunction
from .laurent import MultiLaurent, VariableMismatch


class NonUnitSeries(ArithmeticError):
    """The q^0 coefficient of a divisor is not a unit."""


class TruncatedQSeries:
    """sum_{m=0}^{K} c_m q^m with each c_m a MultiLaurent over ``variables``."""

    __slots__ = ("order", "variables", "coeffs")

    def __init__(self, variables, coeffs, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.variables = tuple(variables)
        self.order = order
        cs = []
        for m in range(order + 1):
            c = coeffs[m] if m < len(coeffs) else 0
            if not isinstance(c, MultiLaurent):
                c = MultiLaurent.constant(self.variables, c)
            elif c.variables != self.variables:
                raise VariableMismatch(f"{c.variables} vs {self.variables}")
            cs.append(c)
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, variables, value, order):
        return cls(variables, [value], order)

    @classmethod
    def from_rational(cls, f: RationalFunction, variables, order: int, q: str = "q"):
        """Expand a rational function of q alone around q = 0."""
        used = f.variables_used()
        if used - {q}:
            raise ValueError(f"{f} depends on more than {q}")
        qi = f.field.index(q)

        def univariate(poly):
            c = {}
            for e, a in poly.terms():
                c[e[qi]] = Fraction(int(a.p), int(a.q))
            return c

        num = univariate(f.num)
        den = univariate(f.den)
        d0 = den.get(0, 0)
        if d0 == 0:
            raise NonUnitSeries(f"denominator of {f} vanishes at q = 0")
        out = []
        for m in range(order + 1):
            s = num.get(m, 0)
            for k in range(1, m + 1):
                if k in den:
                    s -= den[k] * out[m - k]
            out.append(Fraction(s) / d0)
        return cls(variables, out, order)

    def _check(self, other):
        if not isinstance(other, TruncatedQSeries):
            raise TypeError("expected a TruncatedQSeries")
        if other.variables != self.variables:
            raise VariableMismatch(f"{self.variables} vs {other.variables}")
        return min(self.order, other.order)

    def _scalar(self, c):
        if isinstance(c, MultiLaurent):
            return c
        return MultiLaurent.constant(self.variables, c)

    def __add__(self, other):
        if not isinstance(other, TruncatedQSeries):
            other = TruncatedQSeries.constant(self.variables, self._scalar(other), self.order)
        k = self._check(other)
        return TruncatedQSeries(self.variables, [a + b for a, b in zip(self.coeffs[: k + 1], other.coeffs)], k)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedQSeries(self.variables, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedQSeries):
            s = self._scalar(other)
            return TruncatedQSeries(self.variables, [c * s for c in self.coeffs], self.order)
        k = self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        nz_a = [i for i in range(k + 1) if a[i]]
        nz_b = [j for j in range(k + 1) if b[j]]
        zero = MultiLaurent(self.variables)
        acc = [zero] * (k + 1)
        for i in nz_a:
            for j in nz_b:
                if i + j > k:
                    break
                acc[i + j] = acc[i + j] + a[i] * b[j]
        out = acc
        return TruncatedQSeries(self.variables, out, k)

    __rmul__ = __mul__

    def shift(self, s: int):
        """Multiply by q^s (s >= 0), keeping the order."""
        if s < 0:
            raise ValueError("negative shift")
        return TruncatedQSeries(self.variables, [0] * s + list(self.coeffs[: self.order + 1 - s]), self.order)

    def inverse(self):
        c0 = self.coeffs[0]
        if not c0.is_monomial():
            raise NonUnitSeries("q^0 coefficient is not a unit monomial")
        inv0 = c0 ** -1
        out = [inv0]
        for m in range(1, self.order + 1):
            s = MultiLaurent(self.variables)
            for k in range(1, m + 1):
                if self.coeffs[k]:
                    s = s + self.coeffs[k] * out[m - k]
            out.append(-(s * inv0))
        return TruncatedQSeries(self.variables, out, self.order)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedQSeries):
            return self * TruncatedQSeries.constant(self.variables, self._scalar(other), self.order).inverse()
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedQSeries.constant(self.variables, 1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def truncate(self, order):
        return TruncatedQSeries(self.variables, self.coeffs[: order + 1], min(order, self.order))

    def constant_term(self):
        """Series of x-constant terms (the q-coefficients of CT_x)."""
        return TruncatedQSeries(self.variables, [c.constant_term() for c in self.coeffs], self.order)

    def invert_variables(self):
        return TruncatedQSeries(self.variables, [c.invert_variables() for c in self.coeffs], self.order)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def is_constant_in_x(self):
        zero = (0,) * len(self.variables)
        return all(all(e == zero for e, _ in c.items()) for c in self.coeffs)

    def scalar_coeffs(self):
        """The coefficients as Fractions (requires constant-in-x)."""
        if not self.is_constant_in_x():
            raise ValueError("series still depends on x")
        return [Fraction(c.constant_term()) for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        k = self._check(other)
        return self.coeffs[: k + 1] == other.coeffs[: k + 1]

    def __hash__(self):
        return hash((self.variables, self.order, self.coeffs))

    def to_json(self):
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    def __str__(self):
        parts = []
        for m, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c})*q^{m}" if m else f"({c})")
        return (" + ".join(parts) or "0") + f" + O(q^{self.order + 1})"

    def __repr__(self):
        return f"TruncatedQSeries({self})"


def qseries_expand_infinite_factor(monomial: MultiLaurent, shift: int, base_exp: int, inverted: bool, K: int):
    """Expand (u q^shift; q^base_exp)_inf, or its reciprocal, through q^K."""
    if base_exp <= 0:
        raise ValueError("base_exp must be positive")
    if shift < 0:
        raise ValueError("shift must be nonnegative")
    if inverted and shift == 0:
        raise NonUnitSeries("inverted factor with shift 0 has a non-unit leading term")
    if not monomial.is_monomial():
        raise ValueError("u must be a single monomial")
    variables = monomial.variables
    one = MultiLaurent.constant(variables, 1)
    result = TruncatedQSeries.constant(variables, 1, K)
    e = shift
    while e <= K:
        if inverted:
            # 1/(1 - u q^e) = sum_m u^m q^(m e)
            coeffs = [0] * (K + 1)
            power = one
            m = 0
            while m * e <= K:
                coeffs[m * e] = power
                power = power * monomial
                m += 1
            factor = TruncatedQSeries(variables, coeffs, K)
        else:
            coeffs = [0] * (K + 1)
            coeffs[0] = one
            if e == 0:
                coeffs[0] = one - monomial
            else:
                coeffs[e] = -monomial
            factor = TruncatedQSeries(variables, coeffs, K)
        result = result * factor
        e += base_exp
    return result
