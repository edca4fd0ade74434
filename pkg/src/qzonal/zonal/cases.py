"""Case data for the zonal checks: (q_M, t_M), the x-variables and the duplication map."""
from __future__ import annotations

from dataclasses import dataclass

from ..exactfield import rational_field
from ..macdonald import Partition, parse_partition
from ..ncalg.checks import z_names
from ..qmatrix import case_dimension, normalize_case

# supported ranks for the exact zonal checks
MAX_RANK = 3


@dataclass(frozen=True)
class CaseConfig:
    """SO: (q_M, t_M) = (q^4, q^2), x_k = z_k^2.  Sp: (q^2, q^4), x_k = z_{2k-1} z_{2k}."""

    case: str
    n: int

    def __post_init__(self):
        object.__setattr__(self, "case", normalize_case(self.case))
        if self.n < 1:
            raise ValueError("need n >= 1")

    @property
    def N(self):
        return case_dimension(self.case, self.n)

    @property
    def qt_exponents(self):
        """Exponents e with (q_M, t_M) = (q^e_q, q^e_t)."""
        return (4, 2) if self.case == "SO" else (2, 4)

    def a_exponents(self):
        """a_k = q^(n-k) (SO) or q^(2(n-k)) (Sp)."""
        step = 1 if self.case == "SO" else 2
        return [step * (self.n - k) for k in range(1, self.n + 1)]

    def z_field(self):
        return rational_field("q", *z_names(self.N))

    def qt_values(self, q, swap=False):
        eq, et = self.qt_exponents
        if swap:
            eq, et = et, eq
        return q**eq, q**et

    def x_values(self, z):
        if self.case == "SO":
            return [zk * zk for zk in z]
        return [z[2 * k] * z[2 * k + 1] for k in range(self.n)]

    def rho_point(self, q):
        """z_j = q^(N-j)."""
        return [q ** (self.N - j) for j in range(1, self.N + 1)]

    def check_mu(self, mu):
        mu = parse_partition(mu)
        if len(mu) > self.n:
            raise ValueError(f"{tuple(mu)} has more than n = {self.n} parts")
        return mu


def duplicate_partition(case, mu, ell=0, n=None):
    """SO: 2 mu + ell Lambda_n.  Sp: (mu_1, mu_1, mu_2, mu_2, ..) + ell Lambda_2n."""
    case = normalize_case(case)
    mu = parse_partition(mu)
    n = len(mu) if n is None else n
    if len(mu) > n:
        raise ValueError(f"{tuple(mu)} has more than n = {n} parts")
    if case == "SO":
        parts = [2 * p for p in mu.padded(n)]
    else:
        parts = [p for p in mu.padded(n) for _ in range(2)]
    parts = [p + ell for p in parts]
    if min(parts, default=0) < 0:
        raise ValueError("twist makes a part negative")
    return Partition(parts)


def weight_eigenvalue(lam, N, q):
    """chi_lambda(C_1) = sum_{k=1}^N q^(2(lambda_k + N - k))."""
    lam = parse_partition(lam)
    total = 0
    for k in range(1, N + 1):
        total = total + q ** (2 * (lam.part(k) + N - k))
    return total


def radial_eigenvalue(case, mu, n, q):
    """SO: sum q^(2(n-k)) q^(4 mu_k).  Sp: (1 + q^2) sum q^(4(n-k)) q^(2 mu_k)."""
    case = normalize_case(case)
    mu = parse_partition(mu)
    total = 0
    if case == "SO":
        for k in range(1, n + 1):
            total = total + q ** (2 * (n - k)) * q ** (4 * mu.part(k))
        return total
    for k in range(1, n + 1):
        total = total + q ** (4 * (n - k)) * q ** (2 * mu.part(k))
    return (1 + q * q) * total
