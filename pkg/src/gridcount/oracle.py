"""Brute-force geometric oracles on small grids.

These enumerate actual point pairs, lines, and threshold dichotomies, with
no shared code or formulas with the fast counting paths, so the two can
check each other.  Sizes are capped (n <= 25 for pair enumeration, n <= 4
for thresholds) since costs grow like n^4; ``force`` lifts a cap for
callers who accept the wait.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Mapping

from .errors import ResourceLimitError

ORACLE_GRID_LIMIT = 25
THRESHOLD_GRID_LIMIT = 4

Point = tuple[int, int]


@dataclass(frozen=True)
class CanonicalLine:
    """A line a*x + b*y + c = 0 in lowest terms with a fixed sign.

    Canonical means gcd(|a|, |b|, |c|) = 1 and a > 0, or a = 0 and b > 0,
    so two point pairs span the same line iff their CanonicalLine keys are
    equal.  Hashable for exactly that use.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a == 0 and self.b == 0:
            raise ValueError("degenerate line: a and b both zero")
        if math.gcd(math.gcd(abs(self.a), abs(self.b)), abs(self.c)) != 1:
            raise ValueError(f"coefficients ({self.a}, {self.b}, {self.c}) not coprime")
        if self.a < 0 or (self.a == 0 and self.b < 0):
            raise ValueError("sign not canonical: need a > 0, or a = 0 and b > 0")


def canonical_line(p: Point, q: Point) -> CanonicalLine:
    """The unique CanonicalLine through two distinct points."""
    if p == q:
        raise ValueError(f"points must be distinct, got {p} twice")
    (px, py), (qx, qy) = p, q
    a = qy - py
    b = px - qx
    c = -(a * px + b * py)
    g = math.gcd(math.gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return CanonicalLine(a, b, c)


@dataclass(frozen=True)
class LineHistogram:
    """How many distinct lines meet the n x n grid in exactly p points.

    ``counts[p]`` is that number of lines; keys with count zero are absent.
    """

    n: int
    counts: Mapping[int, int]

    def total_lines(self) -> int:
        return sum(self.counts.values())


def _check_grid(n: int, cap: int, force: bool) -> None:
    if n < 2:
        raise ValueError(f"grid side must be >= 2, got {n}")
    if n > cap and not force:
        raise ResourceLimitError(
            f"oracle capped at n <= {cap} (got {n}); pass force to lift"
        )


def _grid_points(n: int) -> list[Point]:
    return [(x, y) for x in range(n) for y in range(n)]


def oracle_line_histogram(n: int, force: bool = False) -> LineHistogram:
    """Enumerate every line through >= 2 grid points and bucket by occupancy."""
    _check_grid(n, ORACLE_GRID_LIMIT, force)
    points: dict[CanonicalLine, set[Point]] = {}
    for p, q in combinations(_grid_points(n), 2):
        points.setdefault(canonical_line(p, q), set()).update((p, q))
    counts = Counter(len(s) for s in points.values())
    return LineHistogram(n=n, counts=dict(sorted(counts.items())))


@lru_cache(maxsize=None)
def _difference_gcd_census(n: int) -> Counter:
    """Histogram of gcd(|dx|, |dy|) over unordered grid point pairs."""
    census: Counter = Counter()
    for (px, py), (qx, qy) in combinations(_grid_points(n), 2):
        census[math.gcd(qx - px, qy - py)] += 1
    return census


def oracle_segments(n: int, p: int, force: bool = False) -> int:
    """Segments covering exactly p grid points, counted pair by pair.

    A pair with difference gcd g spans g - 1 interior points, so covering
    p points means g = p - 1.
    """
    _check_grid(n, ORACLE_GRID_LIMIT, force)
    if p < 2:
        raise ValueError(f"a segment passes through at least 2 points, got p={p}")
    return _difference_gcd_census(n)[p - 1]


def oracle_threshold_count(n: int, force: bool = False) -> int:
    """Linear threshold dichotomies of the n x n grid, counted as bitmasks.

    Every dichotomy d(x, y) = [a1 x + a2 y + b > 0] is realized with an
    integer normal bounded by the grid and a threshold strictly between two
    adjacent projection values, so enumerating those plus the two constant
    dichotomies covers them all.  Each dichotomy becomes a bitmask over the
    n^2 points; the answer is the number of distinct masks.
    """
    if n < 1:
        raise ValueError(f"grid side must be >= 1, got {n}")
    if n > THRESHOLD_GRID_LIMIT and not force:
        raise ResourceLimitError(
            f"threshold oracle capped at n <= {THRESHOLD_GRID_LIMIT} (got {n});"
            " pass force to lift"
        )
    points = _grid_points(n)
    full = (1 << len(points)) - 1
    masks = {0, full}
    for a1 in range(-(n - 1), n):
        for a2 in range(-(n - 1), n):
            if a1 == 0 and a2 == 0:
                continue
            levels = sorted({a1 * x + a2 * y for x, y in points})
            for lo, hi in zip(levels, levels[1:]):
                s = lo + hi  # threshold at the midpoint, doubled to stay integral
                mask = 0
                for k, (x, y) in enumerate(points):
                    if 2 * (a1 * x + a2 * y) > s:
                        mask |= 1 << k
                masks.add(mask)
    return len(masks)
