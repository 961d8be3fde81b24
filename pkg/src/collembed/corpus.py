"""Deterministic generators for the test corpus.

The two hand-derived facet lists (dunce hat, projective plane) are frozen
data with their derivations documented next to them; everything else is
constructed on the fly.  All generators are pure: identical parameters
produce byte-identical complexes.
"""

from __future__ import annotations

from itertools import combinations

from .complexes import SimplicialComplex
from .rng import Lcg


def gen_simplex(n: int) -> SimplicialComplex:
    """Full (n-1)-simplex on vertices 0..n-1 with all faces."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return SimplicialComplex.from_facets([list(range(n))])


def gen_skeleton(n: int, k: int) -> SimplicialComplex:
    """k-skeleton of the full (n-1)-simplex: all (k+1)-subsets as facets."""
    if not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    return SimplicialComplex.from_facets(
        [list(c) for c in combinations(range(n), k + 1)])


def gen_vkf_cone(d: int) -> SimplicialComplex:
    """Barycentric subdivision of the cone over the (d-1)-skeleton of the
    2d-simplex.  For d = 2 the skeleton is K5 and the cone carries 10
    triangles; the subdivision is the canonical collapsible d-complex that
    needs the full 2d ambient dimensions to embed linearly."""
    if d < 2:
        raise ValueError("d must be >= 2")
    skeleton = gen_skeleton(2 * d + 1, d - 1)
    return skeleton.cone(2 * d + 1).barycentric_subdivision()


# Dunce hat: a disk whose boundary circle is glued to itself three times
# over (twice forwards, once backwards).  Derivation of the facet list:
# subdivide each of the three identified boundary arcs into the path
# 0-1-2-0, so the disk is a 9-gon with boundary vertex labels, in order,
# 0 1 2 0 1 2 0 2 1.  Triangulate it with an inner pentagon 3 4 5 6 7:
# a 14-triangle annulus between the 9-gon and the pentagon, plus the
# pentagon fanned from vertex 3.  The labelling was chosen so that after
# identification no two triangles and no two unidentified edges carry the
# same vertex set, so the quotient is again a simplicial complex.  The
# result has f-vector (8, 24, 17); the three glued edges {0,1} {1,2} {0,2}
# each lie in three triangles and every other edge in two, so the complex
# has no free face at all.
_DUNCE_HAT_FACETS = (
    (0, 1, 3), (1, 2, 3), (2, 3, 4), (0, 2, 4), (0, 1, 4),
    (1, 4, 5), (1, 2, 5), (0, 2, 5), (0, 5, 6), (0, 2, 6),
    (1, 2, 6), (1, 6, 7), (0, 1, 7), (0, 3, 7),
    (3, 4, 5), (3, 5, 6), (3, 6, 7),
)


def gen_dunce_hat() -> SimplicialComplex:
    """The 8-vertex triangulation of the dunce hat: contractible (Euler
    characteristic 1) but with no free faces, hence not collapsible."""
    return SimplicialComplex.from_facets([list(f) for f in _DUNCE_HAT_FACETS])


# Real projective plane: antipodal quotient of the icosahedron, the unique
# 6-vertex triangulation.  The list can be reproduced by taking the 20
# icosahedron facets and keeping one triangle from each antipodal pair.
# Checks that pin it down: 15 edges (every vertex pair), every edge in
# exactly two triangles, every vertex link a 5-cycle, characteristic 1;
# the only closed surface with characteristic 1 is the projective plane.
_PROJECTIVE_PLANE_FACETS = (
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
    (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5),
)


def gen_projective_plane() -> SimplicialComplex:
    """The 6-vertex projective plane: 10 triangles, characteristic 1,
    not contractible, yet it admits a Morse certificate."""
    return SimplicialComplex.from_facets([list(f) for f in _PROJECTIVE_PLANE_FACETS])


def gen_cycle(n: int) -> SimplicialComplex:
    """Polygonal n-cycle, n >= 3."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimplicialComplex.from_facets(
        [[i, (i + 1) % n] for i in range(n)])


def gen_path(n: int) -> SimplicialComplex:
    """Path on n vertices (a single vertex for n = 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return SimplicialComplex.from_facets([[0]])
    return SimplicialComplex.from_facets([[i, i + 1] for i in range(n - 1)])


def gen_random_tree(n: int, seed: int) -> SimplicialComplex:
    """Random tree by uniform attachment: vertex i >= 1 hangs off a
    uniformly chosen earlier vertex."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return SimplicialComplex.from_facets([[0]])
    rng = Lcg(seed)
    return SimplicialComplex.from_facets(
        [[rng.below(i), i] for i in range(1, n)])


GENERATORS: dict[str, tuple] = {
    "simplex": (gen_simplex, ("n",), False),
    "vkf-cone": (gen_vkf_cone, ("d",), False),
    "dunce-hat": (gen_dunce_hat, (), False),
    "projective-plane": (gen_projective_plane, (), False),
    "cycle": (gen_cycle, ("n",), False),
    "path": (gen_path, ("n",), False),
    "random-tree": (gen_random_tree, ("n",), True),
}


def generate(name: str, params: list[int], seed: int = 0) -> SimplicialComplex:
    """Look up a generator by name and run it; the registry maps each name
    to (function, positional integer parameters, wants-seed)."""
    if name not in GENERATORS:
        known = ", ".join(sorted(GENERATORS))
        raise ValueError(f"unknown generator {name!r} (known: {known})")
    func, arg_names, wants_seed = GENERATORS[name]
    if len(params) != len(arg_names):
        raise ValueError(
            f"generator {name!r} expects {len(arg_names)} parameter(s) "
            f"({' '.join(arg_names) or 'none'}), got {len(params)}")
    args = list(params)
    if wants_seed:
        args.append(seed)
    return func(*args)
