"""Simplicial complexes, PL degree, component indices, Hopf invariant."""

from .complexes import (
    ManifoldReport,
    OrientedComplex,
    SimplicialComplex,
    Subdivision,
    barycentric_subdivision,
    boundary_complex,
    propagate_orientation,
    simplex_boundary,
    validate_closed_manifold,
)
from .degree import (
    BalancedSimplexFound,
    CubeRegion,
    Degree,
    LabeledCover,
    SimplexRegion,
    closed_star_cover,
    induce_labeling,
    pl_degree,
    rainbow_simplices,
    subdivide_cover,
)
from .hopf import first_homology, hopf_invariant
from .index import (
    IndexSumReport,
    balanced_components,
    component_index,
    index_sum_check,
)

__all__ = [
    "BalancedSimplexFound",
    "CubeRegion",
    "Degree",
    "IndexSumReport",
    "LabeledCover",
    "ManifoldReport",
    "OrientedComplex",
    "SimplexRegion",
    "SimplicialComplex",
    "Subdivision",
    "balanced_components",
    "barycentric_subdivision",
    "boundary_complex",
    "closed_star_cover",
    "component_index",
    "first_homology",
    "hopf_invariant",
    "index_sum_check",
    "induce_labeling",
    "pl_degree",
    "propagate_orientation",
    "rainbow_simplices",
    "simplex_boundary",
    "subdivide_cover",
    "validate_closed_manifold",
]
