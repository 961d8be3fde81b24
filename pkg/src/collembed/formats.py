"""Text formats for complexes, collapse sequences, embeddings, points and
certificates.

All formats are line-oriented UTF-8.  ``#`` starts a comment; blank lines
are ignored on input.  Writers emit canonical form only (sorted facets,
fully reduced fractions with positive denominators, no comments), so
write -> parse -> write is byte-identical.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .collapse import CollapsePair, CollapseSequence, MorseCertificate
from .complexes import Simplex, SimplicialComplex
from .geometry import EmbeddingMap, Point
from .tverberg import PointSet, TverbergCertificate

_RATIONAL = re.compile(r"-?\d+(/[1-9]\d*)?$")


class FormatError(ValueError):
    """Parse failure with a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def _parse_ints(parts: list[str], line_no: int) -> list[int]:
    vals = []
    for p in parts:
        if not p.isdigit():
            raise FormatError(line_no, f"expected a non-negative integer, got {p!r}")
        vals.append(int(p))
    return vals


def _parse_rational(tok: str, line_no: int) -> Fraction:
    if not _RATIONAL.match(tok):
        raise FormatError(line_no, f"expected an integer or p/q fraction, got {tok!r}")
    return Fraction(tok)


def _fmt_q(q: Fraction) -> str:
    return str(q)  # Fraction prints p/q reduced, or just p when integral


# -- complexes ----------------------------------------------------------------


def write_complex(complex_: SimplicialComplex) -> str:
    lines = ["facet " + " ".join(map(str, f)) for f in complex_.facets]
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    facets = []
    for line_no, line in _content_lines(text):
        parts = line.split()
        if parts[0] != "facet":
            raise FormatError(line_no, f"expected 'facet', got {parts[0]!r}")
        if len(parts) < 2:
            raise FormatError(line_no, "facet line needs at least one vertex")
        verts = _parse_ints(parts[1:], line_no)
        if len(set(verts)) != len(verts):
            raise FormatError(line_no, f"repeated vertex in facet {verts}")
        facets.append(verts)
    if not facets:
        raise FormatError(1, "no facets found")
    return SimplicialComplex.from_facets(facets)


# -- collapse sequences -------------------------------------------------------


def write_sequence(seq: CollapseSequence) -> str:
    lines = []
    for k, pair in enumerate(seq.steps):
        free = " ".join(map(str, pair.free_face))
        coface = " ".join(map(str, pair.coface))
        lines.append(f"collapse {k}: {free} | {coface}")
    lines.append("target:")
    return "\n".join(lines) + "\n" + write_complex(seq.target)


def parse_sequence(text: str) -> CollapseSequence:
    steps: list[CollapsePair] = []
    target_lines: list[str] = []
    in_target = False
    target_line_no = 0
    for line_no, line in _content_lines(text):
        if in_target:
            target_lines.append(line)
            continue
        if line == "target:":
            in_target = True
            target_line_no = line_no
            continue
        m = re.match(r"collapse (\d+): ([\d ]+)\|([\d ]+)$", line)
        if not m:
            raise FormatError(line_no, f"malformed collapse step: {line!r}")
        if int(m.group(1)) != len(steps):
            raise FormatError(line_no, f"step index {m.group(1)} out of order")
        free = _parse_ints(m.group(2).split(), line_no)
        coface = _parse_ints(m.group(3).split(), line_no)
        if not set(free) < set(coface):
            raise FormatError(line_no, "free face must be a proper subset of its coface")
        steps.append(CollapsePair(Simplex(free), Simplex(coface)))
    if not in_target:
        raise FormatError(1, "missing 'target:' section")
    try:
        target = parse_complex("\n".join(target_lines))
    except FormatError as exc:
        raise FormatError(target_line_no + exc.line_no, str(exc).split(": ", 1)[1]) from exc
    return CollapseSequence(tuple(steps), target)


# -- embeddings ---------------------------------------------------------------


def write_embedding(emb: EmbeddingMap) -> str:
    lines = [f"dim {emb.ambient_dim}"]
    for v in sorted(emb.assignment):
        coords = " ".join(_fmt_q(q) for q in emb.assignment[v])
        lines.append(f"vertex {v}: {coords}")
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> EmbeddingMap:
    lines = _content_lines(text)
    if not lines:
        raise FormatError(1, "empty embedding file")
    line_no, head = lines[0]
    m = re.match(r"dim (\d+)$", head)
    if not m:
        raise FormatError(line_no, f"expected 'dim m' header, got {head!r}")
    dim = int(m.group(1))
    assignment: dict[int, Point] = {}
    for line_no, line in lines[1:]:
        m = re.match(r"vertex (\d+): (.+)$", line)
        if not m:
            raise FormatError(line_no, f"expected 'vertex <label>: q1 ... qm', got {line!r}")
        v = int(m.group(1))
        if v in assignment:
            raise FormatError(line_no, f"vertex {v} assigned twice")
        coords = [_parse_rational(tok, line_no) for tok in m.group(2).split()]
        if len(coords) != dim:
            raise FormatError(line_no, f"expected {dim} coordinates, got {len(coords)}")
        assignment[v] = tuple(coords)
    if not assignment:
        raise FormatError(line_no, "embedding assigns no vertices")
    return EmbeddingMap(assignment, dim)


# -- point sets ---------------------------------------------------------------


def write_points(point_set: PointSet) -> str:
    lines = ["point " + " ".join(_fmt_q(q) for q in p) for p in point_set.points]
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> PointSet:
    pts: list[Point] = []
    for line_no, line in _content_lines(text):
        parts = line.split()
        if parts[0] != "point":
            raise FormatError(line_no, f"expected 'point', got {parts[0]!r}")
        if len(parts) < 2:
            raise FormatError(line_no, "point line needs at least one coordinate")
        pts.append(tuple(_parse_rational(tok, line_no) for tok in parts[1:]))
    if not pts:
        raise FormatError(1, "no points found")
    if len({len(p) for p in pts}) != 1:
        raise FormatError(1, "points of mixed dimension")
    return PointSet(tuple(pts))


# -- morse certificates -------------------------------------------------------


def write_morse_certificate(cert: MorseCertificate) -> str:
    head = "critical " + " ".join(map(str, cert.critical_triangle))
    return head + "\n" + write_sequence(cert.sequence)


def parse_morse_certificate(text: str) -> MorseCertificate:
    lines = text.splitlines()
    head_no = next((i for i, raw in enumerate(lines, start=1)
                    if raw.split("#", 1)[0].strip()), 1)
    head = lines[head_no - 1].split("#", 1)[0].strip()
    m = re.match(r"critical ((?:\d+ ?)+)$", head)
    if not m:
        raise FormatError(head_no, f"expected 'critical v1 v2 v3', got {head!r}")
    tri = _parse_ints(m.group(1).split(), head_no)
    if len(tri) != 3:
        raise FormatError(head_no, "critical face must have exactly 3 vertices")
    seq = parse_sequence("\n".join(lines[head_no:]))
    return MorseCertificate(Simplex(tri), seq, seq.target)


# -- tverberg certificates ----------------------------------------------------


def write_tverberg_certificate(cert: TverbergCertificate) -> str:
    lines = [f"parts {len(cert.partition)}"]
    for j, block in enumerate(cert.partition):
        lines.append(f"part {j}: " + " ".join(map(str, block)))
    lines.append("point " + " ".join(_fmt_q(q) for q in cert.common_point))
    for j, ws in enumerate(cert.weights):
        lines.append(f"weights {j}: " + " ".join(_fmt_q(w) for w in ws))
    return "\n".join(lines) + "\n"


def parse_tverberg_certificate(text: str) -> TverbergCertificate:
    lines = _content_lines(text)
    if not lines:
        raise FormatError(1, "empty certificate")
    line_no, head = lines[0]
    m = re.match(r"parts (\d+)$", head)
    if not m:
        raise FormatError(line_no, f"expected 'parts r' header, got {head!r}")
    r = int(m.group(1))
    partition: list[tuple[int, ...]] = []
    weights: list[tuple[Fraction, ...]] = []
    point: Point | None = None
    for line_no, line in lines[1:]:
        if line.startswith("part "):
            m = re.match(r"part (\d+): ([\d ]+)$", line)
            if not m or int(m.group(1)) != len(partition):
                raise FormatError(line_no, f"malformed or out-of-order part line: {line!r}")
            partition.append(tuple(_parse_ints(m.group(2).split(), line_no)))
        elif line.startswith("point "):
            point = tuple(_parse_rational(t, line_no) for t in line.split()[1:])
        elif line.startswith("weights "):
            m = re.match(r"weights (\d+): (.+)$", line)
            if not m or int(m.group(1)) != len(weights):
                raise FormatError(line_no, f"malformed or out-of-order weights line: {line!r}")
            weights.append(tuple(_parse_rational(t, line_no)
                                 for t in m.group(2).split()))
        else:
            raise FormatError(line_no, f"unexpected line: {line!r}")
    if len(partition) != r or len(weights) != r or point is None:
        raise FormatError(line_no, "certificate is incomplete")
    return TverbergCertificate(tuple(partition), point, tuple(weights))
