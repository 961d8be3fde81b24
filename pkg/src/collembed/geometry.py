"""Exact affine predicates and the embeddedness verifier.

Points are tuples of ``Fraction``; nothing on a verdict path ever touches
floating point, so a returned verdict is a certificate, not an estimate.

Two realized simplices *properly intersect* when their convex hulls meet
exactly in the convex hull of their shared vertices.  An embedding of a
complex is accepted when every facet realizes with affinely independent
vertices and every unordered facet pair properly intersects; checking
facet pairs suffices because any bad face pair lies inside a bad facet
pair (unit-tested by brute force over all face pairs).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import Simplex, SimplicialComplex
from .linprog import INFEASIBLE, OPTIMAL, lp_solve

Point = tuple[Fraction, ...]

EMBEDDED = "embedded"
NOT_EMBEDDED = "not_embedded"
DEGENERATE = "degenerate"


def as_point(coords) -> Point:
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class EmbeddingMap:
    """Assignment of a point in R^ambient_dim to every vertex label."""

    assignment: dict[int, Point]
    ambient_dim: int

    def point(self, vertex: int) -> Point:
        return self.assignment[vertex]

    def points_of(self, face: Simplex) -> list[Point]:
        return [self.assignment[v] for v in face]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of verifying an embedding.

    * ``embedded``: no witness fields set.
    * ``not_embedded``: ``facet_pair`` improperly intersects and ``point``
      is an exact common point outside the shared face's hull.
    * ``degenerate``: ``facet`` has affinely dependent vertex images and
      ``dependency`` holds coefficients that sum to zero and combine the
      images to the origin.
    """

    verdict: str
    facet_pair: tuple[Simplex, Simplex] | None = None
    point: Point | None = None
    facet: Simplex | None = None
    dependency: tuple[Fraction, ...] | None = None

    @property
    def embedded(self) -> bool:
        return self.verdict == EMBEDDED


def _check_dims(points: list[Point]) -> int:
    if not points:
        raise ValueError("need at least one point")
    m = len(points[0])
    if any(len(p) != m for p in points):
        raise ValueError("points of mixed dimension")
    return m


def affine_dependency(points: list[Point]) -> tuple[Fraction, ...] | None:
    """A nontrivial vector a with sum(a) = 0 and sum(a_i * p_i) = 0, or None
    if the points are affinely independent."""
    m = _check_dims(points)
    k = len(points) - 1
    if k == 0:
        return None
    # Solve for a dependency among the difference vectors p_i - p_0.
    cols = [[points[i + 1][j] - points[0][j] for i in range(k)] for j in range(m)]
    # Gaussian elimination on the m x k system, tracking free columns.
    pivot_in_col: list[int | None] = [None] * k
    row = 0
    for col in range(k):
        piv = next((r for r in range(row, m) if cols[r][col] != 0), None)
        if piv is None:
            continue
        cols[row], cols[piv] = cols[piv], cols[row]
        inv = Fraction(1) / cols[row][col]
        cols[row] = [e * inv for e in cols[row]]
        for r in range(m):
            if r != row and cols[r][col] != 0:
                f = cols[r][col]
                cols[r] = [a - f * b for a, b in zip(cols[r], cols[row])]
        pivot_in_col[col] = row
        row += 1
        if row == m:
            break
    free = next((c for c in range(k) if pivot_in_col[c] is None), None)
    if free is None:
        return None
    coeff = [Fraction(0)] * k
    coeff[free] = Fraction(1)
    for col in range(k):
        r = pivot_in_col[col]
        if r is not None:
            coeff[col] = -cols[r][free]
    deps = [-sum(coeff)] + coeff
    return tuple(deps)


def affine_rank(points: list[Point]) -> int:
    """Rank of the difference vectors against the first point; the points
    are affinely independent iff this equals len(points) - 1."""
    m = _check_dims(points)
    k = len(points) - 1
    if k <= 0:
        return 0
    rows = [[points[i + 1][j] - points[0][j] for j in range(m)] for i in range(k)]
    rank = 0
    for col in range(m):
        piv = next((r for r in range(rank, k) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(k):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == k:
            break
    return rank


def _boxes_disjoint(a: list[Point], b: list[Point], m: int) -> bool:
    for i in range(m):
        if max(p[i] for p in a) < min(q[i] for q in b):
            return True
        if max(q[i] for q in b) < min(p[i] for p in a):
            return True
    return False


def intersection_witness(a: list[Point], b: list[Point],
                         shared: list[tuple[int, int]]) -> Point | None:
    """Exact common point of conv(a) and conv(b) outside the hull of the
    shared vertices, or None when the two simplices intersect properly.

    ``shared`` pairs an index into ``a`` with the index into ``b`` holding
    the same vertex.  Both vertex lists must be affinely independent (the
    uniqueness of barycentric coordinates is what makes the zero-optimum
    criterion below exact); ValueError otherwise.
    """
    m = _check_dims(a + b)
    for i, j in shared:
        if a[i] != b[j]:
            raise ValueError(f"shared pair ({i}, {j}) names different points")
    if affine_rank(a) != len(a) - 1 or affine_rank(b) != len(b) - 1:
        raise ValueError("degenerate simplex: vertices affinely dependent")
    if not shared and _boxes_disjoint(a, b, m):
        return None

    # Variables: weights on a's vertices then b's.  Maximize total weight
    # on non-shared vertices subject to both combinations agreeing and each
    # summing to one.  Optimum 0 (or infeasibility) means the intersection
    # is exactly the shared face.
    p, q = len(a), len(b)
    shared_a = {i for i, _ in shared}
    shared_b = {j for _, j in shared}
    cost = [Fraction(0 if i in shared_a else 1) for i in range(p)]
    cost += [Fraction(0 if j in shared_b else 1) for j in range(q)]
    rows = []
    rhs = []
    for i in range(m):
        rows.append([pt[i] for pt in a] + [-pt[i] for pt in b])
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * p + [Fraction(0)] * q)
    rhs.append(Fraction(1))
    rows.append([Fraction(0)] * p + [Fraction(1)] * q)
    rhs.append(Fraction(1))
    res = lp_solve(cost, rows, rhs)
    if res.status == INFEASIBLE:
        return None
    assert res.status == OPTIMAL  # objective bounded by 2
    if res.value == 0:
        return None
    lam = res.x[:p]
    return tuple(sum(lam[i] * a[i][j] for i in range(p)) for j in range(m))


def proper_intersection(a: list[Point], b: list[Point],
                        shared: list[tuple[int, int]]) -> bool:
    """True iff conv(a) and conv(b) meet exactly in their shared face."""
    return intersection_witness(a, b, shared) is None


def verify_embedding(complex_: SimplicialComplex, emb: EmbeddingMap) -> VerificationReport:
    """Decide embeddedness of a realized complex with exact arithmetic.

    Scans facets for affine degeneracy first, then tests every unordered
    facet pair for proper intersection in canonical order, reporting the
    first failure.  Raises ValueError if the embedding misses a vertex or
    mixes ambient dimensions.
    """
    m = emb.ambient_dim
    for v in complex_.vertices:
        pt = emb.assignment.get(v)
        if pt is None:
            raise ValueError(f"embedding is missing vertex {v}")
        if len(pt) != m:
            raise ValueError(f"vertex {v} has a point of dimension {len(pt)}, expected {m}")
    facets = complex_.facets
    for f in facets:
        dep = affine_dependency(emb.points_of(f))
        if dep is not None:
            return VerificationReport(DEGENERATE, facet=f, dependency=dep)
    for i in range(len(facets)):
        fi = facets[i]
        pts_i = emb.points_of(fi)
        set_i = set(fi)
        for j in range(i + 1, len(facets)):
            fj = facets[j]
            common = sorted(set_i & set(fj))
            shared = [(fi.index(v), fj.index(v)) for v in common]
            witness = intersection_witness(pts_i, emb.points_of(fj), shared)
            if witness is not None:
                return VerificationReport(NOT_EMBEDDED, facet_pair=(fi, fj), point=witness)
    return VerificationReport(EMBEDDED)
