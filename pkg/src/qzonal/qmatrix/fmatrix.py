"""Sparse exact matrices over a RationalField.

Tensor products use the Kronecker convention with leg 1 as the slow index:
the basis vector v_i (x) v_k of V (x) V sits at position i*N + k.
"""
from __future__ import annotations

from ..exactfield import RationalFunction


class FMatrix:
    __slots__ = ("nrows", "ncols", "field", "_rows")

    def __init__(self, nrows, ncols, field, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        rows = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < nrows and 0 <= j < ncols):
                    raise IndexError(f"cell {(i, j)} outside {nrows}x{ncols}")
                v = field(v)
                if not v.is_zero():
                    rows.setdefault(i, {})[j] = v
        self._rows = rows

    @classmethod
    def _from_rows(cls, nrows, ncols, field, rows):
        obj = cls.__new__(cls)
        obj.nrows, obj.ncols, obj.field = nrows, ncols, field
        obj._rows = {i: r for i, r in rows.items() if r}
        return obj

    # constructors
    @classmethod
    def zeros(cls, nrows, ncols, field):
        return cls(nrows, ncols, field)

    @classmethod
    def identity(cls, n, field):
        return cls(n, n, field, {(i, i): 1 for i in range(n)})

    @classmethod
    def diag(cls, values, field):
        return cls(len(values), len(values), field, {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_rows(cls, rows, field):
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}
        return cls(len(rows), len(rows[0]) if rows else 0, field, entries)

    @classmethod
    def unit(cls, n, i, j, field):
        """Matrix unit e_ij (0-based)."""
        return cls(n, n, field, {(i, j): 1})

    # access
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, cell):
        i, j = cell
        return self._rows.get(i, {}).get(j, self.field.zero)

    def items(self):
        for i in sorted(self._rows):
            row = self._rows[i]
            for j in sorted(row):
                yield (i, j), row[j]

    def nonzero_count(self):
        return sum(len(r) for r in self._rows.values())

    def to_rows(self):
        return [[self[i, j] for j in range(self.ncols)] for i in range(self.nrows)]

    def map(self, fn):
        return FMatrix(self.nrows, self.ncols, self.field, {c: fn(v) for c, v in self.items()})

    # arithmetic
    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        if self.field is not other.field:
            raise ValueError(f"field mismatch {self.field} vs {other.field}")

    def __add__(self, other):
        self._same_shape(other)
        rows = {i: dict(r) for i, r in self._rows.items()}
        for i, r in other._rows.items():
            row = rows.setdefault(i, {})
            for j, v in r.items():
                s = row.get(j)
                s = v if s is None else s + v
                if s.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = s
        return FMatrix._from_rows(self.nrows, self.ncols, self.field, rows)

    def __neg__(self):
        return FMatrix._from_rows(
            self.nrows, self.ncols, self.field, {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        if c.is_zero():
            return FMatrix.zeros(self.nrows, self.ncols, self.field)
        return FMatrix._from_rows(
            self.nrows, self.ncols, self.field, {i: {j: v * c for j, v in r.items()} for i, r in self._rows.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, FMatrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if self.field is not other.field:
            raise ValueError(f"field mismatch {self.field} vs {other.field}")
        rows = {}
        orows = other._rows
        for i, r in self._rows.items():
            acc = {}
            for k, a in r.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for j, b in brow.items():
                    p = a * b
                    s = acc.get(j)
                    acc[j] = p if s is None else s + p
            acc = {j: v for j, v in acc.items() if not v.is_zero()}
            if acc:
                rows[i] = acc
        return FMatrix._from_rows(self.nrows, other.ncols, self.field, rows)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, FMatrix):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def first_difference(self, other):
        """First cell (row-major) where the matrices differ, or None."""
        self._same_shape(other)
        cells = set()
        for i, r in self._rows.items():
            cells.update((i, j) for j in r)
        for i, r in other._rows.items():
            cells.update((i, j) for j in r)
        for c in sorted(cells):
            if self[c] != other[c]:
                return c
        return None

    def is_zero(self):
        return not self._rows

    def transpose(self):
        return FMatrix(self.ncols, self.nrows, self.field, {(j, i): v for (i, j), v in self.items()})

    def kron(self, other):
        if self.field is not other.field:
            raise ValueError("field mismatch")
        entries = {}
        for (i, j), a in self.items():
            for (k, l), b in other.items():
                entries[(i * other.nrows + k, j * other.ncols + l)] = a * b
        return FMatrix(self.nrows * other.nrows, self.ncols * other.ncols, self.field, entries)

    def partial_transpose(self, N, leg):
        """Transpose in one tensor leg of an N^2 x N^2 matrix."""
        if self.shape != (N * N, N * N):
            raise ValueError("partial transpose needs an N^2 x N^2 matrix")
        entries = {}
        for (r, c), v in self.items():
            i, k = divmod(r, N)
            j, l = divmod(c, N)
            if leg == 1:
                i, j = j, i
            elif leg == 2:
                k, l = l, k
            else:
                raise ValueError("leg must be 1 or 2")
            entries[(i * N + k, j * N + l)] = v
        return FMatrix(self.nrows, self.ncols, self.field, entries)

    def block(self, i, j, N):
        """The N x N block at block position (i, j), 0-based (leg-1 indices)."""
        entries = {}
        for k in range(N):
            for l in range(N):
                v = self[i * N + k, j * N + l]
                if not v.is_zero():
                    entries[(k, l)] = v
        return FMatrix(N, N, self.field, entries)

    def inverse(self):
        n = self.nrows
        if n != self.ncols:
            raise ValueError("only square matrices are invertible")
        a = [[self[i, j] for j in range(n)] + [self.field.one if i == j else self.field.zero for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if not a[r][c].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[c], a[piv] = a[piv], a[c]
            inv = a[c][c].inverse()
            a[c] = [x * inv for x in a[c]]
            for r in range(n):
                if r != c and not a[r][c].is_zero():
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return FMatrix(n, n, self.field, {(i, j): a[i][n + j] for i in range(n) for j in range(n)})

    def substitute(self, bindings, field=None):
        field = field or self.field
        return FMatrix(self.nrows, self.ncols, field, {c: v.substitute(bindings, field) for c, v in self.items()})

    def to_json(self):
        return {"rows": self.nrows, "cols": self.ncols, "entries": [[i, j, v.to_json()] for (i, j), v in self.items()]}

    def __str__(self):
        width = [0] * self.ncols
        cells = [[str(self[i, j]) for j in range(self.ncols)] for i in range(self.nrows)]
        for row in cells:
            for j, s in enumerate(row):
                width[j] = max(width[j], len(s))
        return "\n".join("[" + "  ".join(s.rjust(width[j]) for j, s in enumerate(row)) + "]" for row in cells)

    def __repr__(self):
        return f"FMatrix({self.nrows}x{self.ncols})"


def matrix_unit(n, i, j, field):
    return FMatrix.unit(n, i, j, field)


def commutator(a: FMatrix, b: FMatrix) -> FMatrix:
    return a * b - b * a


def is_rf(x):
    return isinstance(x, RationalFunction)
