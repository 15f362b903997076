"""
Coxeter Workbench - Complexes Module
Finite simplicial complexes, their structural predicates and a small library.
"""

from .simplicial import (
    Simplex,
    SimplicialComplex,
    from_facets,
    complex_from_document,
    link,
    skeleton,
    euler_characteristic,
    barycentre_name,
    parse_barycentre,
    order_complex,
    barycentric_subdivision,
    is_flag,
    is_pseudo_manifold,
    is_orientable,
    orientation_cancels,
    PseudoManifoldVerdict,
    OrientationResult,
)

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "from_facets",
    "complex_from_document",
    "link",
    "skeleton",
    "euler_characteristic",
    "barycentre_name",
    "parse_barycentre",
    "order_complex",
    "barycentric_subdivision",
    "is_flag",
    "is_pseudo_manifold",
    "is_orientable",
    "orientation_cancels",
    "PseudoManifoldVerdict",
    "OrientationResult",
]
