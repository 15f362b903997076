"""
Homomorphisms to elementary abelian 2-groups

A TwoGroupHom assigns each generator a vector in F_2^k. Vectors are handled
as bitmasks with coordinate 0 in the most significant bit, so integer order
equals lexicographic order of the coordinate tuples.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np

from common.errors import InputError, UnknownGeneratorError

from .words import Word


def pack(vector: Sequence[int]) -> int:
    value = 0
    for bit in vector:
        value = (value << 1) | (int(bit) & 1)
    return value


def unpack(value: int, rank: int) -> Tuple[int, ...]:
    return tuple((value >> (rank - 1 - i)) & 1 for i in range(rank))


def span(vectors: Iterable[int]) -> List[int]:
    """All F_2 combinations of the given bitmasks, sorted."""
    elements = {0}
    for v in vectors:
        if v in elements:
            continue
        elements |= {e ^ v for e in elements}
    return sorted(elements)


def f2_rank(vectors: Iterable[int], rank: int) -> int:
    """Rank over F_2, by elimination on a numpy bit matrix."""
    rows = [unpack(v, rank) for v in vectors]
    if not rows:
        return 0
    m = np.array(rows, dtype=np.uint8)
    r = 0
    for c in range(m.shape[1]):
        pivots = np.nonzero(m[r:, c])[0]
        if pivots.size == 0:
            continue
        p = r + pivots[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        m[others] ^= m[r]
        r += 1
        if r == m.shape[0]:
            break
    return r


def coset_representative(q: int, subgroup: Sequence[int]) -> int:
    """Lexicographically least element of q + subgroup."""
    return min(q ^ h for h in subgroup)


@dataclass(frozen=True)
class TwoGroupHom:
    """Homomorphism from a group on named generators to F_2^rank."""

    rank: int
    images: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.rank < 0:
            raise InputError("rank must be non-negative")
        limit = 1 << self.rank
        for gen, value in self.images.items():
            if not 0 <= value < limit:
                raise InputError(f"image of {gen!r} does not fit in rank {self.rank}")
        object.__setattr__(self, "images", dict(self.images))

    @classmethod
    def from_vectors(cls, rank: int, vectors: Mapping[str, Sequence[int]]) -> "TwoGroupHom":
        for gen, vec in vectors.items():
            if len(vec) != rank:
                raise InputError(f"image of {gen!r} has length {len(vec)}, expected {rank}")
        return cls(rank, {g: pack(v) for g, v in vectors.items()})

    @classmethod
    def from_classes(cls, classes: Mapping[str, Iterable[str]]) -> "TwoGroupHom":
        """Colour classes in key order go to the standard basis vectors."""
        keys = sorted(classes, key=_colour_sort_key)
        rank = len(keys)
        images = {}
        for i, key in enumerate(keys):
            for gen in classes[key]:
                images[gen] = 1 << (rank - 1 - i)
        return cls(rank, images)

    def vector(self, gen: str) -> Tuple[int, ...]:
        return unpack(self.image(gen), self.rank)

    def image(self, gen: str) -> int:
        try:
            return self.images[gen]
        except KeyError:
            raise UnknownGeneratorError(gen, context="homomorphism")

    def require_domain(self, generators: Iterable[str], operation: str) -> None:
        """The images must be given on exactly these generators."""
        expected = set(generators)
        for gen in sorted(expected - set(self.images)):
            raise UnknownGeneratorError(gen, context=f"homomorphism passed to {operation}")
        extra = sorted(set(self.images) - expected)
        if extra:
            raise InputError(f"{operation}: homomorphism has images for {', '.join(extra)}, which are not generators")

    def image_subgroup(self) -> List[int]:
        return span(self.images.values())

    @property
    def index(self) -> int:
        """Order of the image, which is the index of the kernel."""
        return len(self.image_subgroup())

    def to_document(self) -> Dict:
        return {
            "rank": self.rank,
            "images": {g: list(unpack(v, self.rank)) for g, v in self.images.items()},
        }


def _colour_sort_key(key: str):
    return (0, int(key), key) if key.lstrip("-").isdigit() else (1, 0, key)


def evaluate_hom(psi: TwoGroupHom, word: Word) -> Tuple[int, ...]:
    """Image of a word; exponents do not matter modulo 2."""
    total = 0
    for gen, _ in word:
        total ^= psi.image(gen)
    return unpack(total, psi.rank)


def evaluate_mask(psi: TwoGroupHom, word: Word) -> int:
    total = 0
    for gen, _ in word:
        total ^= psi.image(gen)
    return total
