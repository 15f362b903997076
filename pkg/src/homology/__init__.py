"""
Coxeter Workbench - Homology Module
Exact integer linear algebra and homology over Z, Q and F_p.
"""

from .matrices import (
    IntegerMatrix,
    SmithNormalForm,
    smith_normal_form,
    invariant_factors,
    integer_rank,
    modular_rank,
    product_is_zero,
    minor_gcd_invariants,
)
from .rings import CoefficientRing, RingKind, ZZ, QQ, Fp
from .chains import DeltaComplexData, simplicial_chain_complex, delta_complex_from_document
from .groups import HomologyGroup, homology, cohomology, homology_batch, betti_numbers
from .manifolds import (
    ManifoldVerdict,
    sphere_homology_check,
    is_r_homology_manifold,
    is_r_homology_sphere,
)

__all__ = [
    "IntegerMatrix",
    "SmithNormalForm",
    "smith_normal_form",
    "invariant_factors",
    "integer_rank",
    "modular_rank",
    "product_is_zero",
    "minor_gcd_invariants",
    "CoefficientRing",
    "RingKind",
    "ZZ",
    "QQ",
    "Fp",
    "DeltaComplexData",
    "simplicial_chain_complex",
    "delta_complex_from_document",
    "HomologyGroup",
    "homology",
    "cohomology",
    "homology_batch",
    "betti_numbers",
    "ManifoldVerdict",
    "sphere_homology_check",
    "is_r_homology_manifold",
    "is_r_homology_sphere",
]
