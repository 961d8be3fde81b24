"""Render an embedded complex to an image file.

Display only: coordinates are converted to floats for drawing, which never
feeds back into any verdict.  Embeddings in the plane are drawn as they
are; higher-dimensional ones are orthogonally projected onto their first
two coordinates.  The output format follows the file extension (.svg gives
a plain-text vector file, .png a raster).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .complexes import SimplicialComplex  # noqa: E402
from .geometry import EmbeddingMap, Point  # noqa: E402


def render_embedding(complex_: SimplicialComplex, emb: EmbeddingMap, path: str,
                     witness: Point | None = None, title: str | None = None) -> None:
    """Draw vertices and the 1-skeleton; mark an optional witness point."""
    xy = {v: (float(p[0]), float(p[1]) if emb.ambient_dim > 1 else 0.0)
          for v, p in emb.assignment.items()}
    fig, ax = plt.subplots(figsize=(7, 7))
    if complex_.dim >= 1:
        for a, b in complex_.faces(1):
            ax.plot([xy[a][0], xy[b][0]], [xy[a][1], xy[b][1]],
                    color="#33658a", linewidth=1.2, zorder=1)
    xs = [xy[v][0] for v in complex_.vertices]
    ys = [xy[v][1] for v in complex_.vertices]
    ax.scatter(xs, ys, s=28, color="#1d3557", zorder=2)
    for v in complex_.vertices:
        ax.annotate(str(v), xy[v], textcoords="offset points", xytext=(4, 4),
                    fontsize=8, color="#444444")
    if witness is not None:
        ax.scatter([float(witness[0])], [float(witness[1]) if len(witness) > 1 else 0.0],
                   s=90, marker="x", color="#e63946", zorder=3,
                   label="intersection witness")
        ax.legend(loc="best", fontsize=8)
    if title is None:
        title = f"{len(complex_.vertices)} vertices in R^{emb.ambient_dim}"
        if emb.ambient_dim > 2:
            title += " (projected to first two coordinates)"
    ax.set_title(title, fontsize=10)
    ax.set_aspect("equal", adjustable="datalim")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
