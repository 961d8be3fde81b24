"""Constructive linear embeddings with exact certificates.

The builder turns a collapsing sequence into coordinates: replaying the
sequence backwards gives a vertex order in which the complex grows one
cell at a time, and the k-th vertex of that order is lifted to first
coordinate base^k, towering over everything before it, while its remaining
coordinates stay in a bounded random spread.  The output is only returned
after the exact verifier accepts it; when verification fails the
separation base is squared and the construction retried, so the result is
certified regardless of how much separation the inputs actually need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .collapse import CollapseSequence, MorseCertificate, anti_collapse_order, replay
from .complexes import Simplex, SimplicialComplex
from .geometry import (DEGENERATE, NOT_EMBEDDED, EmbeddingMap, Point,
                       VerificationReport, verify_embedding)
from .rng import Lcg


@dataclass(frozen=True)
class EmbedParams:
    """Knobs of the coordinate scheme.

    base      growth ratio between consecutive first coordinates (>= 2)
    spread    scale of the remaining coordinates (>= 1)
    seed      seed for the deterministic generator
    max_escalations   attempts before giving up (>= 1)
    """

    base: int = 16
    spread: int = 10_000
    seed: int = 0
    max_escalations: int = 16

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if self.spread < 1:
            raise ValueError("spread must be >= 1")
        if self.max_escalations < 1:
            raise ValueError("max_escalations must be >= 1")


class EmbeddingError(Exception):
    """Raised when no verified embedding was produced within the attempt
    budget; carries the last verification report."""

    def __init__(self, message: str, report: VerificationReport | None = None):
        super().__init__(message)
        self.report = report


def _draw_coordinates(order: list[int], ambient: int, exponents: list[int],
                      base: int, spread: int, seed: int) -> EmbeddingMap:
    """First coordinate of order[k] is base**exponents[k]; the other
    coordinates are drawn from [0, spread*(k+1)) and redrawn until each
    coordinate index is collision-free across vertices.  Draws are made
    vertex by vertex, coordinate index ascending, so the stream is fully
    determined by the seed."""
    rng = Lcg(seed)
    used: list[set[int]] = [set() for _ in range(ambient)]
    assignment: dict[int, Point] = {}
    for k, v in enumerate(order):
        coords = [Fraction(base) ** exponents[k]]
        for i in range(1, ambient):
            val = rng.below(spread * (k + 1))
            while val in used[i]:
                val = rng.below(spread * (k + 1))
            used[i].add(val)
            coords.append(Fraction(val))
        assignment[v] = tuple(coords)
    return EmbeddingMap(assignment, ambient)


def assign_coordinates(order: list[int], d: int, params: EmbedParams) -> EmbeddingMap:
    """Tower coordinates in R^{2d} for a duplicate-free vertex order."""
    if len(set(order)) != len(order):
        raise ValueError("vertex order contains duplicates")
    if d < 1:
        raise ValueError("d must be >= 1")
    return _draw_coordinates(order, 2 * d, list(range(len(order))),
                             params.base, params.spread, params.seed)


def embed_collapsible(complex_: SimplicialComplex, seq: CollapseSequence,
                      params: EmbedParams = EmbedParams()) -> tuple[EmbeddingMap, VerificationReport]:
    """Verified embedding of a collapsible d-complex in R^{2d}.

    ``seq`` must be a legal collapse of the complex to a single vertex
    (ValueError otherwise).  Degenerate draws advance the seed; improper
    intersections square the base; at most ``max_escalations`` attempts.
    """
    replay(complex_, seq)
    target_faces = seq.target.face_set
    if not (len(target_faces) == 1 and next(iter(target_faces)).dim == 0):
        raise ValueError("sequence does not collapse to a single vertex")
    d = complex_.dim
    if d < 1:
        raise ValueError("complex must have dimension >= 1")
    order = anti_collapse_order(seq)
    exponents = list(range(len(order)))
    return _verified(complex_, order, 2 * d, exponents, params)


def embed_morse111(complex_: SimplicialComplex, cert: MorseCertificate,
                   params: EmbedParams = EmbedParams()) -> tuple[EmbeddingMap, VerificationReport]:
    """Verified embedding in R^4 of a 2-complex from its Morse certificate.

    The deletion's anti-collapse order is reordered so the critical
    triangle's three vertices come last, and those three get the extra-high
    first coordinates base^(n+1), base^(n+2), base^(n+3) (n = vertex
    count), putting the whole triangle above everything else.
    """
    if complex_.dim != 2:
        raise ValueError("morse embedding requires a 2-complex")
    t = cert.critical_triangle
    if t not in complex_.facets or t.dim != 2:
        raise ValueError("certificate triangle is not a facet of the complex")
    deleted = complex_.delete_facet(t)
    replay(deleted, cert.sequence)
    if cert.cycle.face_set != cert.sequence.target.face_set or not cert.cycle.is_closed_arc():
        raise ValueError("certificate cycle does not match its sequence")
    base_order = anti_collapse_order(cert.sequence)
    tri = list(t)
    order = [v for v in base_order if v not in t] + tri
    n = len(order)
    exponents = list(range(n - 3)) + [n + 1, n + 2, n + 3]
    return _verified(complex_, order, 4, exponents, params)


def embed_generic(complex_: SimplicialComplex,
                  params: EmbedParams = EmbedParams()) -> tuple[EmbeddingMap, VerificationReport]:
    """Baseline: random integer coordinates in R^{2d+1}, retried until the
    verifier accepts.  Degenerate draws advance the seed; improper
    intersections square the spread."""
    verts = list(complex_.vertices)
    n = len(verts)
    ambient = 2 * complex_.dim + 1
    seed = params.seed
    spread = params.spread
    report = None
    for _ in range(params.max_escalations):
        rng = Lcg(seed)
        assignment = {
            v: tuple(Fraction(rng.below(spread * n * n)) for _ in range(ambient))
            for v in verts
        }
        emb = EmbeddingMap(assignment, ambient)
        report = verify_embedding(complex_, emb)
        if report.embedded:
            return emb, report
        if report.verdict == DEGENERATE:
            seed += 1
        else:
            spread *= spread
    raise EmbeddingError(
        f"no verified generic embedding within {params.max_escalations} attempts",
        report)


def _verified(complex_: SimplicialComplex, order: list[int], ambient: int,
              exponents: list[int], params: EmbedParams) -> tuple[EmbeddingMap, VerificationReport]:
    seed = params.seed
    base = params.base
    report = None
    for _ in range(params.max_escalations):
        emb = _draw_coordinates(order, ambient, exponents, base, params.spread, seed)
        report = verify_embedding(complex_, emb)
        if report.embedded:
            return emb, report
        if report.verdict == DEGENERATE:
            seed += 1
        elif report.verdict == NOT_EMBEDDED:
            base *= base
    raise EmbeddingError(
        f"no verified embedding within {params.max_escalations} attempts", report)
