"""
Tietze Simplification

A modest, deterministic simplifier: cyclically reduce relators, drop empty
and repeated ones, and eliminate a generator that occurs exactly once in a
short relator by substituting its expression everywhere.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from common.settings import get_settings
from common.tracing import traced

from .presentation import Presentation
from .words import Word, cyclic_reduce, free_reduce, rotations

logger = logging.getLogger(__name__)


def cyclic_canonical(word: Word) -> Tuple:
    """Least rotation of the word or its inverse; equal for cyclic conjugates."""
    if not word:
        return ()
    candidates = list(rotations(word)) + list(rotations(word.inverse()))
    return min(c.letters for c in candidates)


def clean_relators(relators: Sequence[Word]) -> List[Word]:
    seen = set()
    cleaned = []
    for relator in relators:
        reduced = cyclic_reduce(relator)
        if not reduced:
            continue
        key = cyclic_canonical(reduced)
        if key in seen:
            continue
        seen.add(key)
        cleaned.append(reduced)
    return cleaned


def _elimination(
    generators: Sequence[str],
    relators: Sequence[Word],
    bound: Optional[int],
) -> Optional[Tuple[str, Word, int]]:
    """(generator, replacement, relator index) for the shortest usable relator."""
    position = {g: i for i, g in enumerate(generators)}
    for index in sorted(range(len(relators)), key=lambda i: (len(relators[i]), i)):
        relator = relators[index]
        if bound is not None and len(relator) - 1 > bound:
            break
        counts = {}
        for g, _ in relator:
            counts[g] = counts.get(g, 0) + 1
        single = [g for g, c in counts.items() if c == 1]
        if not single:
            continue
        g = max(single, key=position.__getitem__)
        i = next(k for k, (h, _) in enumerate(relator) if h == g)
        e = relator.letters[i][1]
        # relator = a g^e b, so g^e = (b a)^-1
        rest = Word(relator.letters[i + 1:] + relator.letters[:i])
        replacement = rest.inverse() if e == 1 else rest
        return g, free_reduce(replacement), index
    return None


@traced("presentations")
def tietze_simplify(pres: Presentation, effort: Optional[int] = None) -> Presentation:
    """
    Repeat cleaning and single eliminations until neither applies.

    effort 0..2 bounds the length of substituted words by the configured
    substitution bounds; effort 3 is unbounded.
    """
    settings = get_settings().tietze
    if effort is None:
        effort = settings.effort
    bound = None if effort >= 3 else settings.substitution_bounds.get(effort, 0)

    generators = list(pres.generators)
    relators = clean_relators(pres.relators)
    while True:
        found = _elimination(generators, relators, bound)
        if found is None:
            break
        g, replacement, index = found
        logger.debug(f"eliminating {g} = {replacement}")
        generators.remove(g)
        relators = [r.substitute({g: replacement}) for k, r in enumerate(relators) if k != index]
        relators = clean_relators(relators)
    result = Presentation(tuple(generators), tuple(relators))
    logger.info(
        f"Tietze effort {effort}: {len(pres.generators)}/{len(pres.relators)} -> "
        f"{len(result.generators)}/{len(result.relators)} generators/relators"
    )
    return result
