"""Partitions, dominance order and box statistics."""
from __future__ import annotations

from functools import lru_cache


class Partition(tuple):
    """Weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts of {parts} are not weakly decreasing")
        return super().__new__(cls, tuple(p for p in parts if p))

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def part(self, i):
        """lambda_i, 1-based, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def padded(self, n):
        if len(self) > n:
            raise ValueError(f"{tuple(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def boxes(self):
        """(i, j) for each box, 1-based row i and column j."""
        return [(i, j) for i, p in enumerate(self, 1) for j in range(1, p + 1)]

    def arm(self, i, j):
        return self[i - 1] - j

    def coarm(self, i, j):
        return j - 1

    def leg(self, i, j):
        return self.conjugate().part(j) - i

    def coleg(self, i, j):
        return i - 1

    def box_stats(self):
        """[(arm, leg, coarm, coleg)] over the boxes, row by row."""
        conj = self.conjugate()
        return [(self[i - 1] - j, conj.part(j) - i, j - 1, i - 1) for i, j in self.boxes()]

    def n_statistic(self):
        """sum (i - 1) lambda_i."""
        return sum(i * p for i, p in enumerate(self))

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        if not self:
            return "()"
        if all(p < 10 for p in self):
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def to_json(self):
        return list(self)


def parse_partition(text) -> Partition:
    """'2,1', '21', '2 1', '' or '0' -> Partition."""
    if isinstance(text, Partition):
        return text
    if isinstance(text, (tuple, list)):
        return Partition(text)
    s = str(text).strip()
    if s in ("", "0", "()", "empty"):
        return Partition()
    if "," in s or " " in s:
        parts = [p for p in s.replace(",", " ").split() if p]
    else:
        parts = list(s)
    return Partition(int(p) for p in parts)


def dominance_less(nu, mu) -> bool:
    """nu < mu in dominance order (strict)."""
    nu, mu = Partition(nu), Partition(mu)
    if nu.size != mu.size:
        raise ValueError(f"sizes differ: |{tuple(nu)}| = {nu.size}, |{tuple(mu)}| = {mu.size}")
    if nu == mu:
        return False
    a = b = 0
    for k in range(max(len(nu), len(mu))):
        a += nu.part(k + 1)
        b += mu.part(k + 1)
        if a > b:
            return False
    return True


def dominance_leq(nu, mu) -> bool:
    return Partition(nu) == Partition(mu) or dominance_less(nu, mu)


@lru_cache(maxsize=None)
def partitions_of(d, max_length=None):
    """Partitions of d with at most max_length parts, in decreasing lexicographic order.

    Lexicographic order refines dominance, so every partition comes after all
    partitions dominating it.
    """
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(Partition(acc))
            return
        if max_length is not None and len(acc) >= max_length:
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(d, d, [])
    return tuple(out)


def partitions_up_to(size, max_length=None):
    return [p for d in range(size + 1) for p in partitions_of(d, max_length)]
