"""
Coxeter Workbench - Presentations Module
Words, finitely presented groups, kernels of maps to elementary abelian
2-groups and their simplification.
"""

from .words import Word, free_reduce, cyclic_reduce, exponent_sums
from .presentation import Presentation, presentation_from_document
from .homomorphisms import TwoGroupHom, evaluate_hom, evaluate_mask, f2_rank, span
from .schreier import reidemeister_schreier, schreier_transversal
from .tietze import tietze_simplify
from .abelian import AbelianInvariants, abelian_invariants

__all__ = [
    "Word",
    "free_reduce",
    "cyclic_reduce",
    "exponent_sums",
    "Presentation",
    "presentation_from_document",
    "TwoGroupHom",
    "evaluate_hom",
    "evaluate_mask",
    "f2_rank",
    "span",
    "reidemeister_schreier",
    "schreier_transversal",
    "tietze_simplify",
    "AbelianInvariants",
    "abelian_invariants",
]
