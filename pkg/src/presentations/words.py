"""
Words

Words in a free group as sequences of (generator, ±1) letters.
Text form follows the case convention: an uppercase letter is the inverse
of the lowercase generator. Generators with longer names use list form.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from common.errors import InputError

Letter = Tuple[str, int]


@dataclass(frozen=True)
class Word:
    """A signed generator sequence. The empty word is the identity."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for gen, exp in self.letters:
            if exp not in (1, -1):
                raise InputError(f"exponent {exp} on {gen!r}; only +1 and -1 are allowed")

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> "Word":
        return cls(tuple((g, int(e)) for g, e in letters))

    @classmethod
    def from_generators(cls, gens: Iterable[str]) -> "Word":
        return cls(tuple((g, 1) for g in gens))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """
        Parse case-convention text such as "YsyS".

        Every generator is one lowercase letter and its uppercase form is the
        inverse, so names with capitals or several characters need list form.
        """
        letters = []
        for ch in text:
            if ch.isspace() or ch in "*.":
                continue
            if not ch.isalpha():
                raise InputError(f"unexpected character {ch!r} in word {text!r}")
            if ch.isupper():
                letters.append((ch.lower(), -1))
            else:
                letters.append((ch, 1))
        return cls(tuple(letters))

    @classmethod
    def coerce(cls, value: Union["Word", str, Sequence]) -> "Word":
        """Accept a Word, case-convention text, or [[gen, exp], ...] list form."""
        if isinstance(value, Word):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        letters = []
        for item in value:
            if isinstance(item, str):
                letters.append((item, 1))
            else:
                gen, exp = item
                letters.append((str(gen), int(exp)))
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def power(self, n: int) -> "Word":
        if n < 0:
            return self.inverse().power(-n)
        return Word(self.letters * n)

    def generators(self) -> List[str]:
        seen = []
        for g, _ in self.letters:
            if g not in seen:
                seen.append(g)
        return seen

    def substitute(self, images: dict) -> "Word":
        """Replace each generator by a word; letters without an image stay."""
        out: List[Letter] = []
        for g, e in self.letters:
            if g in images:
                image = images[g] if e == 1 else images[g].inverse()
                out.extend(image.letters)
            else:
                out.append((g, e))
        return Word(tuple(out))

    def is_case_convention_safe(self) -> bool:
        return all(len(g) == 1 and g.islower() for g, _ in self.letters)

    def to_text(self) -> str:
        return "".join(g if e == 1 else g.upper() for g, e in self.letters)

    def to_list(self) -> List[List]:
        return [[g, e] for g, e in self.letters]

    def to_document(self):
        """Text when every generator is a single lowercase letter, list form otherwise."""
        if self.is_case_convention_safe():
            return self.to_text()
        return self.to_list()

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        if self.is_case_convention_safe():
            return self.to_text()
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)


def free_reduce(word: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    stack: List[Letter] = []
    for g, e in word.letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return Word(tuple(stack))


def cyclic_reduce(word: Word) -> Word:
    """Freely reduce, then strip inverse pairs from the two ends."""
    letters = list(free_reduce(word).letters)
    start, end = 0, len(letters) - 1
    while start < end and letters[start][0] == letters[end][0] and letters[start][1] == -letters[end][1]:
        start += 1
        end -= 1
    return Word(tuple(letters[start:end + 1]))


def rotations(word: Word) -> Iterator[Word]:
    letters = word.letters
    for i in range(len(letters)):
        yield Word(letters[i:] + letters[:i])


def exponent_sums(word: Word, generators: Sequence[str]) -> List[int]:
    index = {g: i for i, g in enumerate(generators)}
    sums = [0] * len(generators)
    for g, e in word.letters:
        sums[index[g]] += e
    return sums


def require_case_convention(generators: Iterable[str], context: str) -> None:
    """Text words can only name single lowercase letters."""
    for g in generators:
        if not (len(g) == 1 and g.islower()):
            raise InputError(
                f"generator {g!r} of the {context} cannot be written in case-convention text; "
                f"give words in list form [[generator, ±1], ...]"
            )
