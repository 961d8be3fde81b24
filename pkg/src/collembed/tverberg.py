"""Certified Tverberg partitions of Euclidean point sets.

Given n points and a part count r, the search enumerates the partitions
into exactly r non-empty parts in restricted-growth-string order and asks,
per partition, an exact LP feasibility question: can each part's convex
hull reach one common point?  The first partition that can yields a
certificate whose weights are exact rationals, so the claim can be
re-verified by plain arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .geometry import Point, as_point
from .linprog import OPTIMAL, lp_solve

# Enumerating partitions blows up combinatorially; this is the default
# cutoff beyond which searches with r >= 3 must be explicitly forced.
GUARD_MAX_POINTS = 14


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]

    def __post_init__(self):
        if not self.points:
            raise ValueError("a point set needs at least one point")
        m = len(self.points[0])
        if any(len(p) != m for p in self.points):
            raise ValueError("points of mixed dimension")

    @classmethod
    def of(cls, coords) -> "PointSet":
        return cls(tuple(as_point(c) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class TverbergCertificate:
    """Partition of the labels 0..n-1 plus a point in every part's hull.

    ``weights[j]`` are the barycentric weights of ``common_point`` on part
    j's points: non-negative, summing to one, combining exactly to the
    common point.
    """

    partition: tuple[tuple[int, ...], ...]
    common_point: Point
    weights: tuple[tuple[Fraction, ...], ...]


def tverberg_bound(r: int, d: int) -> int:
    """Point count above which an r-part partition with intersecting hulls
    always exists for point sets coming from d-complex embeddings."""
    if r < 1 or d < 1:
        raise ValueError("r and d must be positive")
    return (r - 1) * (2 * d + 1) + 1


def hulls_common_point(parts: list[list[Point]]) -> tuple[Point, list[list[Fraction]]] | None:
    """A point lying in the convex hull of every part, with exact weights
    per part, or None if the hulls have no common point."""
    if not parts or any(not part for part in parts):
        raise ValueError("every part must be non-empty")
    m = len(parts[0][0])
    for part in parts:
        for p in part:
            if len(p) != m:
                raise ValueError("points of mixed dimension")
    sizes = [len(part) for part in parts]
    nvars = sum(sizes)
    offs = [sum(sizes[:j]) for j in range(len(parts))]

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    # Part j's combination agrees with part 0's, coordinate by coordinate.
    for j in range(1, len(parts)):
        for i in range(m):
            row = [Fraction(0)] * nvars
            for k, p in enumerate(parts[0]):
                row[offs[0] + k] = p[i]
            for k, p in enumerate(parts[j]):
                row[offs[j] + k] = -p[i]
            rows.append(row)
            rhs.append(Fraction(0))
    for j in range(len(parts)):
        row = [Fraction(0)] * nvars
        for k in range(sizes[j]):
            row[offs[j] + k] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))

    res = lp_solve([Fraction(0)] * nvars, rows, rhs)
    if res.status != OPTIMAL:
        return None
    weights = [list(res.x[offs[j]:offs[j] + sizes[j]]) for j in range(len(parts))]
    common = tuple(
        sum(weights[0][k] * parts[0][k][i] for k in range(sizes[0]))
        for i in range(m)
    )
    return common, weights


def _partitions_into(n: int, r: int) -> Iterator[list[list[int]]]:
    """Set partitions of 0..n-1 with exactly r blocks, in restricted-growth-
    string order (the subsequence of canonical RGS order with r blocks)."""
    code = [0] * n

    def rec(i: int, used: int) -> Iterator[list[list[int]]]:
        if i == n:
            if used == r:
                blocks: list[list[int]] = [[] for _ in range(r)]
                for idx, c in enumerate(code):
                    blocks[c].append(idx)
                yield blocks
            return
        top = min(used, r - 1)
        for c in range(top + 1):
            new_used = used if c < used else used + 1
            # Remaining positions must still be able to open enough blocks.
            if new_used + (n - i - 1) < r:
                continue
            code[i] = c
            yield from rec(i + 1, new_used)

    if 0 < r <= n:
        yield from rec(0, 0)


def find_tverberg_partition(point_set: PointSet, r: int,
                            allow_large: bool = False) -> TverbergCertificate | None:
    """First partition (in restricted-growth-string order) of the point set
    into r non-empty parts whose hulls share a point, as a certificate.

    Raises ValueError if r is out of range, or if the instance exceeds the
    desk-scale guard (n > 14 with r >= 3) and ``allow_large`` is not set.
    """
    n = len(point_set)
    if r < 1:
        raise ValueError("r must be >= 1")
    if r > n:
        raise ValueError(f"cannot split {n} points into {r} non-empty parts")
    if n > GUARD_MAX_POINTS and r >= 3 and not allow_large:
        raise ValueError(
            f"n={n} with r={r} exceeds the enumeration guard; pass allow_large=True to force")
    pts = point_set.points
    for blocks in _partitions_into(n, r):
        parts = [[pts[i] for i in block] for block in blocks]
        hit = hulls_common_point(parts)
        if hit is not None:
            common, weights = hit
            return TverbergCertificate(
                partition=tuple(tuple(block) for block in blocks),
                common_point=common,
                weights=tuple(tuple(w) for w in weights),
            )
    return None
