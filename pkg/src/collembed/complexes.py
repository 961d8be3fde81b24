"""Finite abstract simplicial complexes.

A complex is stored by its facets (inclusion-maximal faces) over integer
vertex labels.  Labels are arbitrary non-negative integers and need not be
contiguous.  The canonical order on faces is lexicographic on the sorted
vertex tuple, which makes every derived iteration deterministic.

Complexes are immutable after construction; every operation returns a new
value, so shared instances are safe to use concurrently.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable


class Simplex(tuple):
    """A single face: a strictly increasing tuple of non-negative vertex labels.

    The constructor accepts any iterable of distinct non-negative integers
    and sorts it into canonical form.
    """

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int]) -> "Simplex":
        vs = sorted(vertices)
        if not vs:
            raise ValueError("a simplex needs at least one vertex")
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"vertex labels must be non-negative integers, got {v!r}")
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise ValueError(f"repeated vertex {a} in simplex {vs}")
        return super().__new__(cls, vs)

    @property
    def dim(self) -> int:
        return len(self) - 1

    def is_face_of(self, other: "Simplex") -> bool:
        return set(self) <= set(other)

    def boundary(self) -> list["Simplex"]:
        """All codimension-1 subfaces, canonically ordered (empty for a vertex)."""
        if len(self) == 1:
            return []
        n = len(self)
        return [Simplex(self[:i] + self[i + 1 :]) for i in range(n)]

    def __repr__(self) -> str:
        return f"Simplex({list(self)})"


def _subfaces(s: Simplex) -> list[Simplex]:
    """Every non-empty subset of s, including s itself."""
    out = []
    for k in range(1, len(s) + 1):
        for c in combinations(s, k):
            out.append(Simplex(c))
    return out


class SimplicialComplex:
    """A non-empty simplicial complex given by its facets.

    Invariants: no facet contains another, the face family is the downward
    closure of the facets, and ``dim`` is the maximum facet dimension.
    Non-pure complexes (facets of mixed dimension) are allowed; they occur
    naturally as intermediates of collapsing.
    """

    __slots__ = ("facets", "_face_set", "_dim")

    def __init__(self, facets: Iterable[Simplex], _faces: frozenset | None = None):
        fs = tuple(sorted(set(facets)))
        if not fs:
            raise ValueError("the empty complex is not allowed")
        self.facets: tuple[Simplex, ...] = fs
        if _faces is None:
            closure: set[Simplex] = set()
            for f in fs:
                closure.update(_subfaces(f))
            _faces = frozenset(closure)
        self._face_set = _faces
        self._dim = max(f.dim for f in fs)

    @classmethod
    def from_facets(cls, facet_lists: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build a complex from raw facet lists, absorbing duplicates and
        faces contained in other facets.

        Raises ValueError on empty input or a repeated vertex within a list.
        """
        simplices = [Simplex(f) for f in facet_lists]
        if not simplices:
            raise ValueError("at least one facet is required")
        maximal = []
        for s in sorted(set(simplices), key=lambda t: (-len(t), t)):
            if not any(s.is_face_of(m) for m in maximal):
                maximal.append(s)
        return cls(maximal)

    @classmethod
    def _from_faces(cls, faces: frozenset) -> "SimplicialComplex":
        """Trusted constructor from an already downward-closed face set."""
        non_maximal: set[Simplex] = set()
        for f in faces:
            if len(f) >= 2:
                non_maximal.update(f.boundary())
        return cls([f for f in faces if f not in non_maximal], _faces=faces)

    # -- derived data ---------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def face_set(self) -> frozenset:
        """All faces as a frozenset of Simplex."""
        return self._face_set

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def faces(self, k: int) -> list[Simplex]:
        """All k-dimensional faces in canonical order; k must be in [0, dim]."""
        if not 0 <= k <= self._dim:
            raise ValueError(f"k={k} out of range for a {self._dim}-complex")
        return sorted(f for f in self._face_set if f.dim == k)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts (f_0, f_1, ..., f_d)."""
        counts = [0] * (self._dim + 1)
        for f in self._face_set:
            counts[f.dim] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * fk for k, fk in enumerate(self.f_vector()))

    def has_face(self, s: Simplex) -> bool:
        return s in self._face_set

    # -- operations -----------------------------------------------------

    def delete_facet(self, t: Simplex) -> "SimplicialComplex":
        """Remove the top cell t, keeping all of its proper faces.

        t must be a facet.  The result contains every face of the complex
        except t itself, so the boundary of t always survives (it becomes a
        set of facets when not covered by other cells).
        """
        t = Simplex(t)
        if t not in self.facets:
            raise ValueError(f"{t!r} is not a facet")
        return SimplicialComplex._from_faces(self._face_set - {t})

    def cone(self, apex: int) -> "SimplicialComplex":
        """Cone with a new apex vertex: facets become F ∪ {apex}."""
        if apex in self.vertices:
            raise ValueError(f"apex {apex} is already a vertex")
        return SimplicialComplex([Simplex(f + (apex,)) for f in self.facets])

    def barycentric_subdivision(self) -> "SimplicialComplex":
        """Subdivide: one new vertex per face, one facet per maximal chain.

        New labels are assigned by sorting the faces by (dimension,
        lexicographic) and numbering consecutively from 0.  A maximal chain
        of the face poset corresponds to an ordering of a facet's vertices,
        read as the sequence of its prefixes.
        """
        ordered = sorted(self._face_set, key=lambda f: (f.dim, f))
        label = {f: i for i, f in enumerate(ordered)}
        new_facets = []
        for facet in self.facets:
            for perm in permutations(facet):
                chain = [label[Simplex(perm[: j + 1])] for j in range(len(perm))]
                new_facets.append(chain)
        return SimplicialComplex.from_facets(new_facets)

    def is_connected(self) -> bool:
        verts = self.vertices
        if len(verts) <= 1:
            return True
        adj: dict[int, set[int]] = {v: set() for v in verts}
        for f in self.facets:
            for a, b in combinations(f, 2):
                adj[a].add(b)
                adj[b].add(a)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def is_closed_arc(self) -> bool:
        """True iff this is a single polygonal cycle: pure 1-dimensional,
        connected, every vertex in exactly two edges."""
        return _faces_form_closed_arc(self._face_set)

    # -- value semantics --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex({[list(f) for f in self.facets]})"


def _faces_form_closed_arc(faces: frozenset) -> bool:
    """Closed-arc test on a raw downward-closed face set (shared with the
    collapse search, which works on face sets directly)."""
    edges = []
    for f in faces:
        if len(f) > 2:
            return False
        if len(f) == 2:
            edges.append(f)
    if not edges:
        return False
    degree: dict[int, int] = {}
    for a, b in edges:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    verts = {v for f in faces if len(f) == 1 for v in f}
    if verts != set(degree) or any(d != 2 for d in degree.values()):
        return False
    # connectivity: walk the cycle from any vertex
    adj: dict[int, list[int]] = {v: [] for v in degree}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    start = next(iter(degree))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(degree)
