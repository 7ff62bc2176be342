"""Lattice polytopes, normal fans and mixed volumes (exact, d <= 3)."""

from mldegree.polytope.core import (
    Facet,
    LatticePolytope,
    convex_hull,
    face,
    lattice_volume,
    minkowski_sum,
    minkowski_sum_all,
    mixed_volume,
    normalized_volume,
)
from mldegree.polytope.fan import Fan, FacetOffsets, facet_offsets, normal_fan, reconstruct_vertices

__all__ = [
    "Facet", "LatticePolytope", "convex_hull", "face", "lattice_volume", "minkowski_sum",
    "minkowski_sum_all", "mixed_volume", "normalized_volume",
    "Fan", "FacetOffsets", "facet_offsets", "normal_fan", "reconstruct_vertices",
]
