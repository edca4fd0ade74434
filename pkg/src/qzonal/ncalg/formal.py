"""Matrices whose entries are formal linear or quadratic forms in noncommuting symbols.

Scalar matrices (FMatrix) commute with the symbols, so a product such as
R X2 R^t2 X1 can be expanded into a quadratic form per cell while keeping the
left-to-right order of the two symbols.  Normal forms are only computed once
per symbol pair, at evaluation time.
"""
from __future__ import annotations


def _acc(d, key, v):
    s = d.get(key)
    v = v if s is None else s + v
    if v.is_zero():
        d.pop(key, None)
    else:
        d[key] = v


class FormMatrix:
    """cells: {(row, col): {key: coefficient}} where key is a symbol or a symbol pair."""

    def __init__(self, nrows, ncols, cells, degree):
        self.nrows = nrows
        self.ncols = ncols
        self.cells = cells
        self.degree = degree

    @classmethod
    def leg1(cls, N, symbol, field):
        """X_1 = X (x) I with X_ac = symbol(a, c)."""
        cells = {}
        for a in range(N):
            for b in range(N):
                for c in range(N):
                    cells[(a * N + b, c * N + b)] = {symbol(a, c): field.one}
        return cls(N * N, N * N, cells, 1)

    @classmethod
    def leg2(cls, N, symbol, field):
        """X_2 = I (x) X."""
        cells = {}
        for a in range(N):
            for b in range(N):
                for d in range(N):
                    cells[(a * N + b, a * N + d)] = {symbol(b, d): field.one}
        return cls(N * N, N * N, cells, 1)

    def _rows(self):
        rows = {}
        for (i, j), f in self.cells.items():
            rows.setdefault(i, {})[j] = f
        return rows

    def right_scalar(self, m):
        """self * m for a scalar FMatrix m."""
        out = {}
        for (i, k), f in self.cells.items():
            mrow = m._rows.get(k)
            if not mrow:
                continue
            for j, c in mrow.items():
                cell = out.setdefault((i, j), {})
                for key, v in f.items():
                    _acc(cell, key, v * c)
        return FormMatrix(self.nrows, m.ncols, {c: f for c, f in out.items() if f}, self.degree)

    def left_scalar(self, m):
        """m * self for a scalar FMatrix m."""
        out = {}
        rows = self._rows()
        for i, mrow in m._rows.items():
            for k, c in mrow.items():
                srow = rows.get(k)
                if not srow:
                    continue
                for j, f in srow.items():
                    cell = out.setdefault((i, j), {})
                    for key, v in f.items():
                        _acc(cell, key, c * v)
        return FormMatrix(m.nrows, self.ncols, {c: f for c, f in out.items() if f}, self.degree)

    def times(self, other):
        """Product of two linear-form matrices; keys become (left, right) pairs."""
        if self.degree != 1 or other.degree != 1:
            raise ValueError("only linear times linear is supported")
        orows = other._rows()
        out = {}
        for (i, k), f in self.cells.items():
            row = orows.get(k)
            if not row:
                continue
            for j, g in row.items():
                cell = out.setdefault((i, j), {})
                for s1, v1 in f.items():
                    for s2, v2 in g.items():
                        _acc(cell, (s1, s2), v1 * v2)
        return FormMatrix(self.nrows, other.ncols, {c: f for c, f in out.items() if f}, 2)

    def __sub__(self, other):
        out = {c: dict(f) for c, f in self.cells.items()}
        for c, f in other.cells.items():
            cell = out.setdefault(c, {})
            for key, v in f.items():
                _acc(cell, key, -v)
        return FormMatrix(self.nrows, self.ncols, {c: f for c, f in out.items() if f}, self.degree)


def evaluate_quadratic(form: dict, pair_value, zero):
    """sum coeff * pair_value(s1, s2) over a quadratic form."""
    total = zero
    for (s1, s2), c in form.items():
        total = total + pair_value(s1, s2).scale(c)
    return total
