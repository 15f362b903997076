"""Abelianization of finitely presented groups."""

from homology.groups import HomologyGroup
from homology.matrices import invariant_factors, matrix_from_rows

from .presentation import Presentation
from .words import exponent_sums

# The abelianization is reported with the same type as a homology group.
AbelianInvariants = HomologyGroup


def relation_matrix(pres: Presentation):
    """Exponent-sum matrix: one row per relator, one column per generator."""
    rows = [exponent_sums(r, pres.generators) for r in pres.relators]
    return matrix_from_rows(rows, len(pres.generators))


def abelian_invariants(pres: Presentation) -> AbelianInvariants:
    factors = invariant_factors(relation_matrix(pres))
    free = len(pres.generators) - len(factors)
    return AbelianInvariants(free, tuple(d for d in factors if d > 1))
