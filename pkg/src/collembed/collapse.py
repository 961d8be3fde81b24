"""Elementary collapses and backtracking search for collapsing sequences.

A face is *free* when it is contained in exactly one other face of the
complex; removing the pair is an elementary collapse.  Deciding whether a
complex collapses to a point is NP-hard in general, so the searches here
are exhaustive backtracking with memoization, bounded by an explicit node
budget.  Everything is deterministic: candidate pairs are always tried in
canonical (lexicographic) order, so identical inputs and budgets yield
identical outcomes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .complexes import Simplex, SimplicialComplex, _faces_form_closed_arc

DEFAULT_BUDGET = 10**6

FOUND = "found"
NOT_FOUND = "not_found"
UNDECIDED = "undecided"


class CollapsePair(NamedTuple):
    free_face: Simplex
    coface: Simplex


@dataclass(frozen=True)
class CollapseSequence:
    """An ordered list of collapse steps plus the surviving subcomplex."""

    steps: tuple[CollapsePair, ...]
    target: SimplicialComplex


@dataclass(frozen=True)
class MorseCertificate:
    """Witness that a 2-complex has one critical cell per dimension:
    deleting ``critical_triangle`` leaves a complex that collapses onto
    ``cycle``, a closed polygonal arc."""

    critical_triangle: Simplex
    sequence: CollapseSequence
    cycle: SimplicialComplex


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a collapse search.

    ``not_found`` is only ever returned after the backtracking tree has
    been explored exhaustively (or an exact invariant rules success out);
    ``undecided`` means the node budget ran out first.
    """

    status: str
    sequence: CollapseSequence | None = None
    certificate: MorseCertificate | None = None

    @property
    def found(self) -> bool:
        return self.status == FOUND


# -- free pairs and single steps ---------------------------------------------


def _coface_index(faces: frozenset) -> dict[Simplex, list[Simplex]]:
    """Map each face to its cofaces one dimension up."""
    up: dict[Simplex, list[Simplex]] = {}
    for f in faces:
        if len(f) >= 2:
            for b in f.boundary():
                up.setdefault(b, []).append(f)
    return up


def _free_pairs(faces: frozenset) -> list[CollapsePair]:
    # A face with exactly one coface one dimension up has exactly one
    # proper superset overall: any larger superset would contribute at
    # least two intermediate cofaces.
    pairs = []
    for face, cofaces in _coface_index(faces).items():
        if len(cofaces) == 1:
            pairs.append(CollapsePair(face, cofaces[0]))
    pairs.sort()
    return pairs


def free_pairs(complex_: SimplicialComplex) -> list[CollapsePair]:
    """All (free face, unique coface) pairs of the complex, in canonical order."""
    return _free_pairs(complex_.face_set)


def elementary_collapse(complex_: SimplicialComplex, pair: CollapsePair) -> SimplicialComplex:
    """Remove a free pair.  Raises ValueError if the pair is not currently free."""
    faces = complex_.face_set
    if pair.free_face not in faces or pair.coface not in faces:
        raise ValueError(f"{pair} is not a pair of faces of the complex")
    cofaces = [f for f in faces if len(f) == len(pair.free_face) + 1
               and pair.free_face.is_face_of(f)]
    if cofaces != [pair.coface]:
        raise ValueError(f"{pair.free_face!r} is not free (cofaces: {sorted(cofaces)})")
    return SimplicialComplex._from_faces(faces - {pair.free_face, pair.coface})


def replay(complex_: SimplicialComplex, seq: CollapseSequence) -> SimplicialComplex:
    """Apply every step of ``seq`` to ``complex_``, validating freeness at each
    step, and check that the final face set equals the sequence's target.
    Returns the final complex; raises ValueError if anything is illegal."""
    current = complex_
    for i, pair in enumerate(seq.steps):
        try:
            current = elementary_collapse(current, pair)
        except ValueError as exc:
            raise ValueError(f"step {i} is illegal: {exc}") from exc
    if current.face_set != seq.target.face_set:
        raise ValueError("sequence does not end at its declared target")
    return current


# -- backtracking search ------------------------------------------------------

_DEAD = "dead"
_BUDGET = "budget"


class _Search:
    """Depth-first search over elementary collapses.

    States are frozensets of faces.  A transposition table of states proven
    dead prunes re-exploration; this is sound because the moves available
    from a state depend only on the state itself.
    """

    def __init__(self, is_target: Callable[[frozenset], bool], budget: int):
        self.is_target = is_target
        self.nodes_left = budget
        self.dead: set[frozenset] = set()
        self.path: list[CollapsePair] = []

    def greedy(self, faces: frozenset) -> str:
        """Descend taking the first free pair at every state.  Cheap and
        complete enough for most collapsible inputs; on dead ends the full
        search below starts over from the root."""
        self.path.clear()
        while True:
            if self.is_target(faces):
                return FOUND
            if self.nodes_left == 0:
                return _BUDGET
            self.nodes_left -= 1
            pairs = _free_pairs(faces)
            if not pairs:
                return _DEAD
            p = pairs[0]
            self.path.append(p)
            faces = faces - {p.free_face, p.coface}

    def dfs(self, faces: frozenset) -> str:
        if self.is_target(faces):
            return FOUND
        if self.nodes_left == 0:
            return _BUDGET
        self.nodes_left -= 1
        for p in _free_pairs(faces):
            child = faces - {p.free_face, p.coface}
            if child in self.dead:
                continue
            self.path.append(p)
            result = self.dfs(child)
            if result == FOUND:
                return FOUND
            self.path.pop()
            if result == _BUDGET:
                return _BUDGET
        self.dead.add(faces)
        return _DEAD

    def run(self, faces: frozenset) -> str:
        outcome = self.greedy(faces)
        if outcome in (FOUND, _BUDGET):
            return outcome
        self.path.clear()
        return self.dfs(faces)


def _search(complex_: SimplicialComplex, is_target: Callable[[frozenset], bool],
            budget: int) -> tuple[SearchOutcome, int]:
    """Run the two-stage search; returns (outcome, nodes consumed)."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    search = _Search(is_target, budget)
    status = search.run(complex_.face_set)
    used = budget - search.nodes_left
    if status == FOUND:
        final = complex_.face_set
        for p in search.path:
            final = final - {p.free_face, p.coface}
        seq = CollapseSequence(tuple(search.path), SimplicialComplex._from_faces(final))
        return SearchOutcome(FOUND, sequence=seq), used
    if status == _BUDGET:
        return SearchOutcome(UNDECIDED), used
    return SearchOutcome(NOT_FOUND), used


def _is_single_vertex(faces: frozenset) -> bool:
    return len(faces) == 1 and len(next(iter(faces))) == 1


def find_collapse_to_vertex(complex_: SimplicialComplex,
                            budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Search for a collapsing sequence reducing the complex to one vertex."""
    return _search(complex_, _is_single_vertex, budget)[0]


def find_collapse_to_cycle(complex_: SimplicialComplex,
                           budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Search for a collapsing sequence whose survivor is a closed polygonal arc."""
    return _search(complex_, _faces_form_closed_arc, budget)[0]


def find_morse_111(complex_: SimplicialComplex,
                   budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Look for a triangle whose deletion collapses to a closed arc.

    Triangles are tried in canonical order and the node budget is shared
    across the per-triangle searches.  Success forces Euler characteristic 1
    (the deletion search target has characteristic 0 and the triangle adds
    one), so complexes with a different characteristic are rejected without
    searching; that shortcut is exact, not heuristic.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if complex_.dim != 2:
        raise ValueError(f"input must be 2-dimensional, got dim {complex_.dim}")
    if complex_.euler_characteristic() != 1:
        return SearchOutcome(NOT_FOUND)
    budget_left = budget
    for t in complex_.facets:
        if t.dim != 2:
            continue
        if budget_left < 1:
            return SearchOutcome(UNDECIDED)
        outcome, used = _search(complex_.delete_facet(t), _faces_form_closed_arc, budget_left)
        budget_left -= used
        if outcome.found:
            cert = MorseCertificate(t, outcome.sequence, outcome.sequence.target)
            return SearchOutcome(FOUND, certificate=cert)
        if outcome.status == UNDECIDED:
            return SearchOutcome(UNDECIDED)
    return SearchOutcome(NOT_FOUND)


def anti_collapse_order(seq: CollapseSequence) -> list[int]:
    """Vertex order of the reversed (anti-collapse) build.

    The target's vertices come first in canonical order; then the reversed
    steps are replayed and each vertex is appended at the step where it
    first appears.  A new vertex can only enter through a (vertex, edge)
    step, so this lists every vertex of the original complex exactly once.
    """
    order = list(seq.target.vertices)
    seen = set(order)
    for pair in reversed(seq.steps):
        for v in pair.coface:
            if v not in seen:
                seen.add(v)
                order.append(v)
    return order
