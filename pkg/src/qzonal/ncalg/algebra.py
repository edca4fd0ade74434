"""The quantum matrix algebra A_q(Mat(N)) as a normal-ordering rewrite system.

Generators t_ij (1-based) are numbered row-major, g = (i-1)*N + (j-1), and a
normal monomial is a weakly increasing tuple of generator numbers.  Products
are normalised by the four straightening rules for an out-of-order adjacent
pair t_h t_g (h > g):

  row      t_kl t_kj = q^-1 t_kj t_kl                         (j < l)
  col      t_kj t_ij = q^-1 t_ij t_kj                         (i < k)
  commute  t_kj t_il = t_il t_kj                              (i < k, j < l)
  cross    t_kl t_ij = t_ij t_kl - (q - q^-1) t_il t_kj       (i < k, j < l)
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from ..exactfield import RationalFunction, rational_field
from ..report import check_mutation

# Single-coefficient mutations used to show the checks are not vacuous.
STRAIGHTEN_MUTATIONS = {"row-q2", "col-q2", "cross-q2", "cross-drop", "commute-q"}


class QuantumMatrixAlgebra:
    """A_q(Mat(N)) over a coefficient field containing q."""

    def __init__(self, N: int, field=None, mutation: str | None = None):
        check_mutation(mutation, STRAIGHTEN_MUTATIONS)
        self.N = N
        self.field = field or rational_field("q")
        self.mutation = mutation
        q = self.field.gen("q")
        self._q = q
        self._qinv = 1 / q
        self._d = q - 1 / q
        self._memo = {}
        self._swap_memo = {}

    def __repr__(self):
        tag = f", mutation={self.mutation}" if self.mutation else ""
        return f"QuantumMatrixAlgebra(N={self.N}{tag})"

    # indexing
    def index(self, i, j):
        if not (1 <= i <= self.N and 1 <= j <= self.N):
            raise IndexError(f"t_{i}{j} outside N={self.N}")
        return (i - 1) * self.N + (j - 1)

    def position(self, g):
        i, j = divmod(g, self.N)
        return i + 1, j + 1

    # elements
    def zero(self):
        return NCPolynomial(self, {})

    def one(self):
        return NCPolynomial(self, {(): self.field.one})

    def scalar(self, c):
        c = self.field(c)
        return NCPolynomial(self, {(): c} if not c.is_zero() else {})

    def t(self, i, j):
        return NCPolynomial(self, {(self.index(i, j),): self.field.one})

    def gens(self):
        return [[self.t(i, j) for j in range(1, self.N + 1)] for i in range(1, self.N + 1)]

    def monomial(self, pairs):
        """Normal form of the word t_{i1 j1} t_{i2 j2} ... given as (i, j) pairs."""
        p = self.one()
        for i, j in pairs:
            p = p * self.t(i, j)
        return p

    # rewriting
    def _swap(self, h, g):
        """Rewrite t_h t_g (h > g) as a list of (coefficient, (g1, g2)) with g1 <= g2."""
        key = (h, g)
        hit = self._swap_memo.get(key)
        if hit is not None:
            return hit
        k, l = divmod(h, self.N)
        i, j = divmod(g, self.N)
        m = self.mutation
        q, qinv, d = self._q, self._qinv, self._d
        if k == i:
            c = qinv * qinv if m == "row-q2" else qinv
            out = [(c, (g, h))]
        elif l == j:
            c = qinv * qinv if m == "col-q2" else qinv
            out = [(c, (g, h))]
        elif l < j:
            out = [(q if m == "commute-q" else self.field.one, (g, h))]
        else:
            out = [(self.field.one, (g, h))]
            if m != "cross-drop":
                dd = q * q - 1 / (q * q) if m == "cross-q2" else d
                out.append((-dd, (i * self.N + l, k * self.N + j)))
        self._swap_memo[key] = out
        return out

    def _mul_gen(self, mono, g):
        """Normal form of mono * t_g as a dict."""
        if not mono or mono[-1] <= g:
            return {mono + (g,): self.field.one}
        key = (mono, g)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        rest, h = mono[:-1], mono[-1]
        acc = {}
        for c, (g1, g2) in self._swap(h, g):
            for m1, c1 in self._mul_gen(rest, g1).items():
                cc = c * c1
                for m2, c2 in self._mul_gen(m1, g2).items():
                    v = cc * c2
                    s = acc.get(m2)
                    acc[m2] = v if s is None else s + v
        acc = {m: v for m, v in acc.items() if not v.is_zero()}
        self._memo[key] = acc
        return acc

    def _mul_mono(self, m1, m2):
        cur = {m1: self.field.one}
        for g in m2:
            nxt = {}
            for m, c in cur.items():
                for m3, c3 in self._mul_gen(m, g).items():
                    v = c * c3
                    s = nxt.get(m3)
                    nxt[m3] = v if s is None else s + v
            cur = {m: v for m, v in nxt.items() if not v.is_zero()}
        return cur

    # derived objects
    def quantum_minor(self, I, J):
        """xi^I_J = sum_w (-q)^l(w) t_{i_w(1) j_1} ... t_{i_w(r) j_r}."""
        I, J = tuple(I), tuple(J)
        if len(I) != len(J) or not I:
            raise ValueError("row and column sets must have the same positive size")
        if list(I) != sorted(set(I)) or list(J) != sorted(set(J)):
            raise ValueError("index sets must be strictly increasing")
        r = len(I)
        mq = -self._q
        total = self.zero()
        for w in permutations(range(r)):
            length = sum(1 for a in range(r) for b in range(a + 1, r) if w[a] > w[b])
            word = self.monomial([(I[w[s]], J[s]) for s in range(r)])
            total = total + word * (mq ** length)
        return total

    def qdet(self):
        full = tuple(range(1, self.N + 1))
        return self.quantum_minor(full, full)


class NCPolynomial:
    """Element of A_q(Mat(N)) in normal form: {normal monomial: coefficient}."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QuantumMatrixAlgebra, terms):
        self.algebra = algebra
        self.terms = terms

    def _lift(self, other):
        if isinstance(other, NCPolynomial):
            if other.algebra is not self.algebra:
                raise ValueError("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            v = c if s is None else s + c
            if v.is_zero():
                out.pop(m, None)
            else:
                out[m] = v
        return NCPolynomial(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return NCPolynomial(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.algebra.field(c)
        if c.is_zero():
            return self.algebra.zero()
        return NCPolynomial(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        alg = self.algebra
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in alg._mul_mono(m1, m2).items():
                    v = c12 * c
                    s = acc.get(m)
                    acc[m] = v if s is None else s + v
        return NCPolynomial(alg, {m: v for m, v in acc.items() if not v.is_zero()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def coefficient(self, pairs):
        """Coefficient of the normal monomial given by (i, j) pairs in any order."""
        mono = tuple(sorted(self.algebra.index(i, j) for i, j in pairs))
        return self.terms.get(mono, self.algebra.field.zero)

    def monomial_exponents(self, mono):
        """[(i, j, mult), ...] in row-major order."""
        out = []
        for g in mono:
            i, j = self.algebra.position(g)
            if out and out[-1][:2] == [i, j]:
                out[-1][2] += 1
            else:
                out.append([i, j, 1])
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def to_json(self):
        return [{"monomial": self.monomial_exponents(m), "coeff": c.to_json()} for m, c in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            word = "*".join(
                f"t{i}{j}" + (f"^{k}" if k > 1 else "") for i, j, k in self.monomial_exponents(m)
            )
            if not word:
                parts.append(f"({c})")
            elif c.is_one():
                parts.append(word)
            else:
                parts.append(f"({c})*{word}")
        return " + ".join(parts)

    def __repr__(self):
        return f"NCPolynomial({self})"


@lru_cache(maxsize=None)
def quantum_matrix_algebra(N, names=("q",), mutation=None):
    """Shared algebra instance (keeps the straightening memo warm)."""
    return QuantumMatrixAlgebra(N, rational_field(*names), mutation)


def nc_mul(p: NCPolynomial, r: NCPolynomial) -> NCPolynomial:
    return p * r
