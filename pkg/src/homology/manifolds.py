"""
Homology Manifolds

R-homology manifold and sphere predicates: every link of an i-simplex in an
n-complex must have the R-homology of an (n-i-1)-sphere.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from common.tracing import traced
from complexes.simplicial import Simplex, SimplicialComplex, link

from .groups import homology
from .rings import ZZ, CoefficientRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ManifoldVerdict:
    holds: bool
    reason: str = ""
    simplex: Optional[Simplex] = None

    def __bool__(self) -> bool:
        return self.holds


def sphere_homology_check(L: SimplicialComplex, d: int, ring: CoefficientRing = ZZ) -> bool:
    """True iff L has the reduced R-homology of S^d; S^-1 is the empty complex."""
    return _failing_degree(L, d, ring) is None


def _failing_degree(L: SimplicialComplex, d: int, ring: CoefficientRing) -> Optional[int]:
    """Lowest degree where the reduced homology of L differs from S^d, or None."""
    if d < 0:
        return None if L.is_empty() else 0
    if L.is_empty():
        return -1
    for k, group in enumerate(homology(L, ring, reduced=True)):
        expected = 1 if k == d else 0
        if group.free_rank != expected or group.torsion:
            return k
    return None if L.dimension >= d else d


@traced("homology", "is_r_homology_manifold")
def is_r_homology_manifold(K: SimplicialComplex, ring: CoefficientRing = ZZ) -> ManifoldVerdict:
    """
    Check every link. On failure the verdict names the simplex whose link
    fails in the lowest degree, so a cut vertex (disconnected link) is
    reported ahead of a boundary vertex. The scan stops at the first link
    that fails in degree 0 or below.
    """
    if K.is_empty():
        return ManifoldVerdict(False, "empty complex")
    n = K.dimension
    worst: Optional[Simplex] = None
    worst_degree = None
    for simplex in K.simplices():
        degree = _failing_degree(link(K, simplex), n - len(simplex), ring)
        if degree is None:
            continue
        if worst_degree is None or degree < worst_degree:
            worst, worst_degree = simplex, degree
        if degree <= 0:
            break
    if worst is None:
        return ManifoldVerdict(True)
    reason = f"link of {list(worst)} is not an {ring}-homology {n - len(worst)}-sphere"
    logger.debug(reason)
    return ManifoldVerdict(False, reason, worst)


def is_r_homology_sphere(K: SimplicialComplex, ring: CoefficientRing = ZZ) -> ManifoldVerdict:
    verdict = is_r_homology_manifold(K, ring)
    if not verdict:
        return verdict
    if not sphere_homology_check(K, K.dimension, ring):
        return ManifoldVerdict(False, f"homology over {ring} differs from the {K.dimension}-sphere")
    return ManifoldVerdict(True)
