from .arcs import admissible_lengths, balanced_arcs_check, short_cycles, step_vectors
from .catalog import (
    CATALOG_NAMES, CatalogError, Remark4Params, SimplexScaleParams, catalog_embedding, catalog_entry,
    cycle_embedding, extremal_simplex, hadamard_code, hadamard_cross, label_search, product_embedding, remark4,
    simplex_scale_params, subset_cuts, two_embeddings_of_simplex, weight_one,
)
from .core import (
    CutDecomposition, Embedding, EmbeddingError, VerifyResult, concatenate, equivalent, rescaled, verify,
)
from .cutcone import (
    DEFAULT_N_MAX, CutconeError, CutconeResult, canonical_cuts, cutcone_decompose, minimal_scale,
)
from .partial_cube import PartialCubeResult, partial_cube, theta_related
from .zones import ZoneResult, direction_families, edge_directions, trace_zones, zone_embed
