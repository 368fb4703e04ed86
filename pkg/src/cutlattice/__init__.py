"""Embeddability of regular tilings, honeycombs and polytopes into hypercubes and cubic lattices."""
from . import embeddings, hypermetrics, metrics, riemann, schlafli, skeletons
from .embeddings import (
    CutDecomposition, Embedding, balanced_arcs_check, catalog_embedding, cutcone_decompose, partial_cube,
    remark4, two_embeddings_of_simplex, verify, zone_embed,
)
from .hypermetrics import ViolationCertificate, find_violation, kgonal_check
from .metrics import apsp, diameter, distance_stability, girth, is_isometric_subgraph
from .riemann import density, enumerate_table2, genus
from .schlafli import SchlafliSymbol, classify, format_symbol, parse
from .skeletons import (
    Patch, Skeleton, antipodal_quotient, atlas_status, named_graph, platonic, polytope_family, pyramid,
    regular_4polytope, star_4polytope, star_honeycomb_skeleton, tiling_patch,
)

__version__ = "0.1.0"
