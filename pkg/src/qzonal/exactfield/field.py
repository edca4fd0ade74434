"""Canonical rational functions over a declared set of formal parameters.

Numerator and denominator are kept as python-flint ``fmpq_mpoly`` values in
a graded-lex context.  After every operation the pair is reduced by the
multivariate gcd and the denominator is scaled to be a primitive integer
polynomial with positive leading coefficient, so equal values have equal
representations.  Negative exponents never appear: ``1/q`` is stored with
``q`` in the denominator.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

import flint

from .laurent import MultiLaurent, VariableMismatch


class DivisionByZero(ZeroDivisionError):
    """Division by the zero rational function."""


class PoleError(ZeroDivisionError):
    """A substitution made a denominator vanish."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


def _lcm(a, b):
    return a // gcd(a, b) * b


def _to_fraction(c):
    return Fraction(int(c.p), int(c.q))


class RationalField:
    """The field Q(v1, ..., vk) for a fixed tuple of variable names.

    Use :func:`rational_field` to obtain instances; fields with the same
    names are the same object.
    """

    def __init__(self, names: tuple[str, ...]):
        if len(set(names)) != len(names):
            raise ValueError(f"repeated variable names in {names}")
        if not names:
            raise ValueError("a field needs at least one variable")
        self.names = names
        self.ctx = flint.fmpq_mpoly_ctx.get(names, "deglex")
        self._index = {v: i for i, v in enumerate(names)}
        self._one = self.ctx.constant(1)
        self.one = RationalFunction._raw(self, self._one, self._one)
        self.zero = RationalFunction._raw(self, self.ctx.constant(0), self._one)

    def __repr__(self):
        return f"RationalField{self.names}"

    def __reduce__(self):
        return (rational_field, self.names)

    def index(self, name):
        return self._index[name]

    def __contains__(self, name):
        return name in self._index

    def gen(self, name: str) -> "RationalFunction":
        return RationalFunction._raw(self, self.ctx.gen(self._index[name]), self._one)

    def gens(self, *names):
        if not names:
            names = self.names
        return tuple(self.gen(v) for v in names)

    def extend(self, *names) -> "RationalField":
        extra = tuple(v for v in names if v not in self._index)
        return rational_field(*(self.names + extra))

    def poly(self, value):
        """An fmpq_mpoly of this context from an int/Fraction constant."""
        if isinstance(value, Fraction):
            return self.ctx.constant(flint.fmpq(value.numerator, value.denominator))
        return self.ctx.constant(value)

    def __call__(self, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            if value.field is self:
                return value
            return value.coerce(self)
        if isinstance(value, (int, Fraction)):
            return RationalFunction._raw(self, self.poly(value), self._one)
        if isinstance(value, MultiLaurent):
            return self.from_laurent(value)
        if isinstance(value, str):
            return self.gen(value)
        if isinstance(value, (flint.fmpq, flint.fmpz)):
            return RationalFunction._raw(self, self.ctx.constant(value), self._one)
        raise TypeError(f"cannot convert {type(value).__name__} into {self}")

    def from_laurent(self, f: MultiLaurent) -> "RationalFunction":
        idx = [self._index[v] for v in f.variables]
        lows = [0] * len(self.names)
        for e, _ in f.items():
            for i, k in zip(idx, e):
                lows[i] = min(lows[i], k)
        terms = {}
        for e, c in f.items():
            full = [-x for x in lows]
            for i, k in zip(idx, e):
                full[i] += k
            c = Fraction(c)
            terms[tuple(full)] = flint.fmpq(c.numerator, c.denominator)
        num = self.ctx.from_dict(terms) if terms else self.ctx.constant(0)
        den = self.ctx.from_dict({tuple(-x for x in lows): 1})
        return RationalFunction(self, num, den)

    def from_json(self, data) -> "RationalFunction":
        return self.from_laurent(MultiLaurent.from_json(data["num"])) / self.from_laurent(
            MultiLaurent.from_json(data["den"])
        )


@lru_cache(maxsize=None)
def _field(names):
    return RationalField(names)


def rational_field(*names: str) -> RationalField:
    """Return the (shared) field over the given variable names."""
    if len(names) == 1 and not isinstance(names[0], str):
        names = tuple(names[0])
    return _field(tuple(names))


class RationalFunction:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: RationalField, num, den=None):
        if den is None:
            den = field._one
        num, den = _canonical(field, num, den)
        self.field = field
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, field, num, den):
        obj = cls.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        return obj

    # conversion
    def _lift(self, other):
        if isinstance(other, RationalFunction):
            if other.field is not self.field:
                raise VariableMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction, flint.fmpq, flint.fmpz)):
            return self.field(other)
        return None

    def coerce(self, field: RationalField) -> "RationalFunction":
        """Relabel into a field whose variables include all of ours."""
        if field is self.field:
            return self
        missing = [v for v in self.field.names if v not in field]
        if missing:
            used = self.variables_used()
            if any(v in used for v in missing):
                raise VariableMismatch(f"{missing} not available in {field}")
        images = [field.ctx.gen(field.index(v)) if v in field else field.ctx.constant(0) for v in self.field.names]
        num = self.num.compose(*images, ctx=field.ctx)
        den = self.den.compose(*images, ctx=field.ctx)
        # relabelling preserves canonical form up to the leading-term ordering
        return RationalFunction(field, num, den)

    def variables_used(self):
        used = set()
        for poly in (self.num, self.den):
            for e in poly.monoms():
                for v, k in zip(self.field.names, e):
                    if k:
                        used.add(v)
        return used

    # predicates
    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self):
        return self.den.is_one()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def __bool__(self):
        return not self.num.is_zero()

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.field, self.num + other.num, self.den)
        return RationalFunction(self.field, self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(self.field, -self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return self.field.zero
        if self.den.is_one() and other.den.is_one():
            return RationalFunction._raw(self.field, self.num * other.num, self.den)
        # cross-reduce before multiplying to keep sizes down
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num / g1, other.den / g1) if not g1.is_one() else (self.num, other.den)
        n2, d1 = (other.num / g2, self.den / g2) if not g2.is_one() else (other.num, self.den)
        return RationalFunction(self.field, n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RationalFunction(self.field, self.den, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._raw(self.field, self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.field.names, str(self.num), str(self.den)))

    # views
    @property
    def numerator(self) -> MultiLaurent:
        return _poly_to_laurent(self.field, self.num)

    @property
    def denominator(self) -> MultiLaurent:
        return _poly_to_laurent(self.field, self.den)

    def to_laurent(self) -> MultiLaurent:
        """The Laurent polynomial equal to self; needs a monomial denominator."""
        if len(self.den) != 1:
            raise ValueError(f"{self} is not a Laurent polynomial")
        (dexp, dc), = self.den.terms()
        dc = _to_fraction(dc)
        return MultiLaurent(
            self.field.names,
            {tuple(a - b for a, b in zip(e, dexp)): _to_fraction(c) / dc for e, c in self.num.terms()},
        )

    def is_laurent(self):
        return len(self.den) == 1

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if self.num.is_zero():
            return Fraction(0)
        return _to_fraction(self.num.leading_coefficient()) / _to_fraction(self.den.leading_coefficient())

    def substitute(self, bindings: Mapping, field: RationalField | None = None) -> "RationalFunction":
        return substitute(self, bindings, field)

    def to_json(self):
        return {"num": self.numerator.to_json(), "den": self.denominator.to_json()}

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        n = str(self.num)
        if len(self.num) > 1 or "/" in n:
            n = f"({n})"
        d = str(self.den)
        if len(self.den) > 1 or not self.den.is_constant() and ("*" in d or "^" in d):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction({self})"


def _poly_to_laurent(field, poly):
    return MultiLaurent(field.names, {e: _to_fraction(c) for e, c in poly.terms()})


def _canonical(field, num, den):
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return num, field._one
    if den.is_constant():
        c = den.leading_coefficient()
        return (num / c if c != 1 else num), field._one
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    # scale so den is a primitive integer polynomial with positive leading coefficient
    coeffs = den.coeffs()
    lden = 1
    gnum = 0
    for c in coeffs:
        lden = _lcm(lden, int(c.q))
        gnum = gcd(gnum, int(c.p))
    scale = Fraction(lden, gnum)
    if den.leading_coefficient() < 0:
        scale = -scale
    if scale != 1:
        s = flint.fmpq(scale.numerator, scale.denominator)
        num = num * s
        den = den * s
    return num, den


def ratfunc_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Binary field operation by name: add, sub, mul or div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise DivisionByZero("division by zero rational function")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _image_pair(field, value):
    value = field(value)
    return value.num, value.den


def _evaluate_homogenized(poly, degs, images, target):
    """sum c * prod P_v^e_v * Q_v^(d_v - e_v) for images (P_v, Q_v)."""
    ctx = target.ctx
    cacheP = [dict() for _ in images]
    cacheQ = [dict() for _ in images]

    def power(cache, base, k):
        if k not in cache:
            cache[k] = base ** k
        return cache[k]

    total = ctx.constant(0)
    for exp, c in poly.terms():
        term = ctx.constant(c)
        for i, k in enumerate(exp):
            P, Q = images[i]
            if k:
                term = term * power(cacheP[i], P, k)
            rest = degs[i] - k
            if rest and not Q.is_one():
                term = term * power(cacheQ[i], Q, rest)
        total = total + term
    return total


def substitute(f: RationalFunction, bindings: Mapping, field: RationalField | None = None) -> RationalFunction:
    """Simultaneously replace variables of ``f`` by rational functions.

    ``bindings`` maps variable names to values (RationalFunction, int or
    Fraction).  Unbound variables keep their name and must exist in the
    target field, which defaults to the field of the bound values.
    """
    if field is None:
        field = f.field
        for v in bindings.values():
            if isinstance(v, RationalFunction):
                field = v.field
                break
    unknown = [v for v in bindings if v not in f.field]
    if unknown:
        raise VariableMismatch(f"{unknown} are not variables of {f.field}")
    images = []
    for v in f.field.names:
        if v in bindings:
            images.append(_image_pair(field, bindings[v]))
        elif v in field:
            images.append((field.ctx.gen(field.index(v)), field._one))
        else:
            images.append(None)
    used = f.variables_used()
    for v, img in zip(f.field.names, images):
        if img is None and v in used:
            raise VariableMismatch(f"variable {v} has no image in {field}")
    images = [img if img is not None else (field.ctx.constant(0), field._one) for img in images]

    if all(Q.is_one() for _, Q in images):
        polys = [P for P, _ in images]
        num = f.num.compose(*polys, ctx=field.ctx)
        den = f.den.compose(*polys, ctx=field.ctx)
        if den.is_zero():
            raise PoleError(f"substitution makes the denominator {f.den} vanish", _offending_factor(f, images, field))
        return RationalFunction(field, num, den)

    dn = f.num.degrees()
    dd = f.den.degrees()
    num = _evaluate_homogenized(f.num, dn, images, field)
    den = _evaluate_homogenized(f.den, dd, images, field)
    if den.is_zero():
        raise PoleError(f"substitution makes the denominator {f.den} vanish", _offending_factor(f, images, field))
    for (P, Q), a, b in zip(images, dn, dd):
        k = b - a
        if k > 0 and not Q.is_one():
            num = num * Q ** k
        elif k < 0 and not Q.is_one():
            den = den * Q ** (-k)
    return RationalFunction(field, num, den)


def _offending_factor(f, images, field):
    try:
        _, factors = f.den.factor()
    except Exception:  # pragma: no cover - factoring is a diagnostic only
        return str(f.den)
    for fac, _ in factors:
        dg = fac.degrees()
        if _evaluate_homogenized(fac, dg, images, field).is_zero():
            return str(fac)
    return str(f.den)


def common_field(*values) -> RationalField | None:
    for v in values:
        if isinstance(v, RationalFunction):
            return v.field
    return None
