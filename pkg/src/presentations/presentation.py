"""
Presentations

Finitely presented groups: a generator list and freely reduced relators.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from common.errors import InputError, UnknownGeneratorError

from .words import Word, free_reduce, require_case_convention


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relators: Tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise InputError("duplicate generator names in presentation")
        known = set(self.generators)
        for relator in self.relators:
            for g, _ in relator:
                if g not in known:
                    raise UnknownGeneratorError(g, context="presentation")
        object.__setattr__(self, "relators", tuple(free_reduce(r) for r in self.relators))

    @classmethod
    def build(cls, generators: Iterable[str], relators: Iterable[Any]) -> "Presentation":
        generators = tuple(generators)
        relators = list(relators)
        if any(isinstance(r, str) for r in relators):
            require_case_convention(generators, "presentation")
        return cls(generators, tuple(Word.coerce(r) for r in relators))

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def relator_lengths(self) -> List[int]:
        return [len(r) for r in self.relators]

    def to_document(self) -> Dict[str, Any]:
        return {
            "generators": list(self.generators),
            "relators": [r.to_document() for r in self.relators],
        }

    def describe(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {gens} | {rels} >"


def presentation_from_document(document: Dict[str, Any], source: str = "presentation") -> Presentation:
    try:
        generators: Sequence[str] = document["generators"]
        relators = document.get("relators", [])
    except (KeyError, TypeError):
        raise InputError("expected keys 'generators' and 'relators'", source=source)
    return Presentation.build(generators, relators)
