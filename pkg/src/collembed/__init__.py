"""collembed: collapsibility search, exact linear embeddings of simplicial
complexes, and certified Tverberg partitions."""

from .collapse import (CollapsePair, CollapseSequence, MorseCertificate,
                       SearchOutcome, anti_collapse_order, elementary_collapse,
                       find_collapse_to_cycle, find_collapse_to_vertex,
                       find_morse_111, free_pairs, replay)
from .complexes import Simplex, SimplicialComplex
from .embed import (EmbeddingError, EmbedParams, assign_coordinates,
                    embed_collapsible, embed_generic, embed_morse111)
from .geometry import (EmbeddingMap, VerificationReport, affine_rank,
                       proper_intersection, verify_embedding)
from .linprog import LPResult, lp_solve
from .tverberg import (PointSet, TverbergCertificate, find_tverberg_partition,
                       hulls_common_point, tverberg_bound)

__version__ = "0.1.0"

__all__ = [
    "CollapsePair", "CollapseSequence", "MorseCertificate", "SearchOutcome",
    "Simplex", "SimplicialComplex", "EmbedParams", "EmbeddingError",
    "EmbeddingMap", "VerificationReport", "LPResult", "PointSet",
    "TverbergCertificate", "anti_collapse_order", "assign_coordinates",
    "affine_rank", "elementary_collapse", "embed_collapsible", "embed_generic",
    "embed_morse111", "find_collapse_to_cycle", "find_collapse_to_vertex",
    "find_morse_111", "find_tverberg_partition", "free_pairs",
    "hulls_common_point", "lp_solve", "proper_intersection", "replay",
    "tverberg_bound", "verify_embedding", "__version__",
]
