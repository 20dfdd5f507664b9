"""Exact counts over the n x n integer grid.

Everything here reduces to one weighted gcd sum,

    f_q(n) = sum over -n < i, j < n with gcd(i, j) = q
             of (n - |i|) (n - |j|),

which counts ordered pairs of grid points whose difference vector has gcd
exactly q.  Consequences:

    segments through exactly p points:  s_p(n) = f_{p-1}(n) / 2
    lines through at least q points:    l_ge_q(n) = (f_{q-1}(n) - f_q(n)) / 2
    lines through exactly q points:     l_q(n) = (f_{q+1} - 2 f_q + f_{q-1}) / 2
    linear threshold functions:         t(n) = f_1(n) + 2

gcd follows math.gcd: gcd(0, k) = |k| and gcd(0, 0) = 0, so the zero
difference never matches any q >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ResourceLimitError
from .totient import TotientTable

#: largest accepted grid side; beyond this the sieve alone is unreasonable
MAX_GRID_N = 10**7

_CHUNK = 1 << 16


@dataclass(frozen=True)
class GridQuery:
    """A validated (n, q) request: grid side n, gcd class q, both >= 1."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"grid side n must be >= 1, got {self.n}")
        if self.q < 1:
            raise ValueError(f"gcd class q must be >= 1, got {self.q}")
        if self.n > MAX_GRID_N:
            raise ResourceLimitError(
                f"grid side {self.n} exceeds the supported maximum {MAX_GRID_N}"
            )


@dataclass(frozen=True)
class LemmaDecomposition:
    """Split of f_q(n+1) along n = q*m + t, 0 <= t < q.

    The two partial sums are stored doubled so they stay integral:
    s1_doubled = 2 s1 and s2_doubled = 2 s2, where

        s1 = sum_{i<=m} (qm - qi) (qm + t + 1 - qi/2) phi(i)
        s2 = sum_{i<=m} (qm + t + 1 - qi/2) phi(i)

    and the recombination 8 s1 + 8 (t+1) s2 equals f_q(n+1).
    """

    n: int
    q: int
    m: int
    t: int
    s1_doubled: int
    s2_doubled: int

    def recombined(self) -> int:
        """f_q(n+1) assembled from the two halves."""
        return 4 * self.s1_doubled + 4 * (self.t + 1) * self.s2_doubled


@dataclass(frozen=True)
class CountSet:
    """All counts derived from f at one (n, q).

    ``segments`` is s_{q+1}(n).  The line counts require q >= 2 and are
    None when q == 1 (l_1 would need f_0, which is not defined).
    """

    n: int
    q: int
    f: int
    segments: int
    lines_at_least: int | None
    lines_exactly: int | None


def f_direct(query: GridQuery) -> int:
    """f_q(n) straight from the definition, O(n^2).  Small n only."""
    n, q = query.n, query.q
    total = 0
    for i in range(-(n - 1), n):
        wi = n - abs(i)
        for j in range(-(n - 1), n):
            if math.gcd(i, j) == q:
                total += wi * (n - abs(j))
    return total


def _check_table(table: TotientTable, needed: int) -> None:
    if table.limit < needed:
        raise ValueError(
            f"totient table limit {table.limit} too small, need at least {needed}"
        )


def f_fast(query: GridQuery, table: TotientTable) -> int:
    """f_q(n) via the totient identity, O(n/q) exact integer arithmetic.

        f_q(n) = 4 * sum_{i=1}^{floor((n-1)/q)} (n - qi) (2n - qi) phi(i)

    Terms overflow 64 bits long before n does, hence the Python-int
    accumulation over sieve slices.
    """
    n, q = query.n, query.q
    m = (n - 1) // q
    _check_table(table, m)
    if m == 0:
        return 0
    phi = table.phi
    two_n = 2 * n
    total = 0
    for lo in range(1, m + 1, _CHUNK):
        hi = min(lo + _CHUNK, m + 1)
        qi = q * lo
        for p in phi[lo:hi].tolist():
            total += (n - qi) * (two_n - qi) * p
            qi += q
    return 4 * total


def decompose_lemma(query: GridQuery, table: TotientTable) -> LemmaDecomposition:
    """Split f_q(n+1) into the two weighted totient sums of the remainder form.

    Writes n = q*m + t and accumulates both halves exactly; see
    LemmaDecomposition for the recombination identity.
    """
    n, q = query.n, query.q
    m, t = divmod(n, q)
    _check_table(table, m)
    base = 2 * (q * m + t + 1)
    qm = q * m
    s1d = 0
    s2d = 0
    qi = q
    for p in table.phi[1 : m + 1].tolist():
        w = (base - qi) * p
        s1d += (qm - qi) * w
        s2d += w
        qi += q
    return LemmaDecomposition(n=n, q=q, m=m, t=t, s1_doubled=s1d, s2_doubled=s2d)


def _half_exact(value: int, what: str) -> int:
    half, rem = divmod(value, 2)
    assert rem == 0, f"{what} must be even, got {value}"
    return half


def segments_count(n: int, p: int, table: TotientTable) -> int:
    """Segments whose endpoints and interior cover exactly p grid points.

    Equals f_{p-1}(n) / 2: each segment is an unordered endpoint pair whose
    difference has gcd p - 1.
    """
    if p < 2:
        raise ValueError(f"a segment passes through at least 2 points, got p={p}")
    f = f_fast(GridQuery(n, p - 1), table)
    return _half_exact(f, f"f_{p - 1}({n})")


def lines_at_least(n: int, q: int, table: TotientTable) -> int:
    """Lines meeting at least q grid points, q >= 2."""
    if q < 2:
        raise ValueError(f"line counts need q >= 2, got {q}")
    diff = f_fast(GridQuery(n, q - 1), table) - f_fast(GridQuery(n, q), table)
    assert diff >= 0, f"f_{q - 1}({n}) < f_{q}({n})"
    return _half_exact(diff, "f difference")


def lines_exactly(n: int, q: int, table: TotientTable) -> int:
    """Lines meeting exactly q grid points, q >= 2."""
    if q < 2:
        raise ValueError(f"line counts need q >= 2, got {q}")
    num = (
        f_fast(GridQuery(n, q + 1), table)
        - 2 * f_fast(GridQuery(n, q), table)
        + f_fast(GridQuery(n, q - 1), table)
    )
    assert num >= 0, f"second difference of f at q={q}, n={n} is negative"
    return _half_exact(num, "second difference of f")


def threshold_count(n: int, table: TotientTable) -> int:
    """Linear threshold dichotomies of the n x n grid: f_1(n) + 2.

    The +2 are the two constant classifications, which no separating line
    realizes but the definition admits.
    """
    return f_fast(GridQuery(n, 1), table) + 2


def table_limit_for(n: int, q: int = 1, lines: bool = False) -> int:
    """Smallest sieve limit that serves f_q(n), or all counts at (n, q).

    With ``lines`` the second difference needs f_{q-1}, hence the wider
    limit floor((n-1)/(q-1)).
    """
    if lines and q >= 2:
        return (n - 1) // (q - 1)
    return (n - 1) // q


def count_set(n: int, q: int, table: TotientTable) -> CountSet:
    """f, segment, and line counts at one (n, q) in a single bundle."""
    f = f_fast(GridQuery(n, q), table)
    segments = _half_exact(f, f"f_{q}({n})")
    if q >= 2:
        at_least = lines_at_least(n, q, table)
        exactly = lines_exactly(n, q, table)
    else:
        at_least = None
        exactly = None
    return CountSet(
        n=n, q=q, f=f, segments=segments, lines_at_least=at_least, lines_exactly=exactly
    )
