from .atlas import AtlasError, AtlasStatus, atlas_entries, atlas_notes, atlas_status
from .core import Patch, ResourceLimitError, Skeleton, SkeletonError, is_isomorphic, two_coloring
from .named import (
    complete_bipartite, complete_graph, complete_minus_triangle, cycle, cycle_product, half_cube,
    named_graph, path, petersen, pyramid,
)
from .polyhedra import antipodal_map, antipodal_quotient, platonic
from .polytopes import (
    cross_polytope, hypercube, lattice_ball, polytope_family, regular_4polytope, simplex,
    star_4polytope,
)
from .tilings import grow_closed, star_honeycomb_skeleton, tiling_patch
