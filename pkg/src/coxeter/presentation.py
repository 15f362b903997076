"""Coxeter presentations <V | v^2, (vw)^m(v,w)>."""

from presentations.presentation import Presentation
from presentations.words import Word

from .system import CoxeterSystem


def coxeter_presentation(sys: CoxeterSystem) -> Presentation:
    """Infinite labels contribute no relator."""
    relators = [Word.from_generators([v, v]) for v in sys.vertices]
    for u, v, m in sys.finite_pairs():
        relators.append(Word.from_generators([u, v]).power(m))
    return Presentation(sys.vertices, tuple(relators))
