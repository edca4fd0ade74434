"""Dense exact linear algebra over a RationalField."""
from __future__ import annotations


class Inconsistent(ValueError):
    """The linear system has no solution."""


def determinant(rows, field):
    """Determinant by Gaussian elimination with nonzero pivoting."""
    m = [[field(x) for x in row] for row in rows]
    n = len(m)
    det = field.one
    for col in range(n):
        piv = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if piv is None:
            return field.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            if m[r][col].is_zero():
                continue
            f = m[r][col] * inv
            m[r] = [a - f * b if c >= col else a for c, (a, b) in enumerate(zip(m[r], m[col]))]
    return det


def solve(rows, rhs, field):
    """Solve rows * x = rhs exactly.

    Returns a particular solution with free variables set to zero together
    with the list of free column indices.  Raises ``Inconsistent`` when no
    solution exists.
    """
    m = [[field(x) for x in row] + [field(b)] for row, b in zip(rows, rhs)]
    nrows = len(m)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if not m[i][ncols].is_zero():
            raise Inconsistent(f"row {i} reduces to 0 = {m[i][ncols]}")
    x = [field.zero] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    return x, free
