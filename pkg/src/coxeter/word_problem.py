"""
Word Problem for Right-Angled Coxeter Groups

Every generator is an involution, so exponents are dropped on input. A word
is reduced by deleting pairs v ... v whose intervening letters all commute
with v; reduced words of one element differ only by commutations, so the
lexicographically least commutation representative is a normal form.
"""

import logging
import random
from dataclasses import dataclass
from typing import List, Mapping, Optional, Sequence

from common.errors import InputError
from presentations.presentation import Presentation
from presentations.words import Word

from .system import CoxeterSystem

logger = logging.getLogger(__name__)


def _letters(sys: CoxeterSystem, word: Word) -> List[str]:
    for gen, _ in word:
        sys.index(gen)
    return [gen for gen, _ in word]


def _cancel(sys: CoxeterSystem, letters: Sequence[str]) -> List[str]:
    reduced: List[str] = []
    for x in letters:
        for j in range(len(reduced) - 1, -1, -1):
            if reduced[j] == x:
                del reduced[j]
                break
            if not sys.commutes(reduced[j], x):
                reduced.append(x)
                break
        else:
            reduced.append(x)
    return reduced


def _least_representative(sys: CoxeterSystem, letters: List[str]) -> List[str]:
    remaining = list(letters)
    out: List[str] = []
    while remaining:
        best = None
        for i, x in enumerate(remaining):
            if all(sys.commutes(remaining[j], x) for j in range(i)):
                if best is None or sys.index(x) < sys.index(remaining[best]):
                    best = i
        out.append(remaining.pop(best))
    return out


def racg_normal_form(sys: CoxeterSystem, word: Word) -> Word:
    sys.require_right_angled("racg_normal_form")
    letters = _cancel(sys, _letters(sys, word))
    return Word.from_generators(_least_representative(sys, letters))


def racg_equal(sys: CoxeterSystem, w1: Word, w2: Word) -> bool:
    return racg_normal_form(sys, w1) == racg_normal_form(sys, w2)


def racg_length(sys: CoxeterSystem, word: Word) -> int:
    return len(racg_normal_form(sys, word))


def random_rewrite(sys: CoxeterSystem, word: Word, rng: random.Random, steps: int = 50) -> Word:
    """
    Apply random legal rewrites: swap adjacent commuting letters, insert or
    delete a square vv, or flip a letter to its inverse.
    """
    letters = [(g, e) for g, e in word]
    for _ in range(steps):
        move = rng.randrange(4)
        if move == 0 and len(letters) >= 2:
            i = rng.randrange(len(letters) - 1)
            if sys.commutes(letters[i][0], letters[i + 1][0]):
                letters[i], letters[i + 1] = letters[i + 1], letters[i]
        elif move == 1:
            v = rng.choice(sys.vertices)
            i = rng.randrange(len(letters) + 1)
            letters[i:i] = [(v, 1), (v, rng.choice((1, -1)))]
        elif move == 2:
            pairs = [i for i in range(len(letters) - 1) if letters[i][0] == letters[i + 1][0]]
            if pairs:
                i = rng.choice(pairs)
                del letters[i:i + 2]
        elif letters:
            i = rng.randrange(len(letters))
            letters[i] = (letters[i][0], -letters[i][1])
    return Word(tuple(letters))


@dataclass(frozen=True)
class HomCheck:
    holds: bool
    failing_index: Optional[int] = None
    failing_relator: Optional[Word] = None
    image_normal_form: Optional[Word] = None

    def __bool__(self) -> bool:
        return self.holds


def verify_presentation_hom(
    src: Presentation,
    target: CoxeterSystem,
    images: Mapping[str, Word],
) -> HomCheck:
    """Check that every relator of src maps to the identity of the target."""
    target.require_right_angled("verify_presentation_hom")
    missing = [g for g in src.generators if g not in images]
    if missing:
        raise InputError(f"no image given for generator {missing[0]!r}")
    for i, relator in enumerate(src.relators):
        image = racg_normal_form(target, relator.substitute(dict(images)))
        if image:
            logger.info(f"relator {i} ({relator}) maps to {image}, not the identity")
            return HomCheck(False, i, relator, image)
    return HomCheck(True)
