"""Words over a finite alphabet, viewed in the free monoid or the free group.

A letter is stored as a nonzero integer: ``i + 1`` for the ``i``-th generator
and ``-(i + 1)`` for its formal inverse.  Text syntax is a whitespace
separated list of tokens ``g``, ``g^k`` or ``g^-k``; the token ``1`` is the
empty word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class WordSyntaxError(ValueError):
    """Raised when a word cannot be parsed; the message names the token."""


@dataclass(frozen=True)
class Alphabet:
    names: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for name in names:
            if not name or any(ch.isspace() for ch in name) or "^" in name or name == "1":
                raise ValueError(f"invalid generator name {name!r}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise WordSyntaxError(f"unknown generator {name!r}") from None

    def letter(self, name: str, sign: int = 1) -> int:
        return sign * (self.index(name) + 1)

    def name_of(self, letter: int) -> str:
        return self.names[abs(letter) - 1]

    def word(self, text: str) -> "Word":
        return parse_word(text, self)

    def gen(self, name: str) -> "Word":
        return Word(self, (self.letter(name),))


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        n = len(self.alphabet)
        for x in letters:
            if x == 0 or abs(x) > n:
                raise ValueError(f"letter {x} out of range for alphabet of size {n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Letters as ``(generator index, sign)`` pairs."""
        return tuple((abs(x) - 1, 1 if x > 0 else -1) for x in self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def is_freely_reduced(self) -> bool:
        return all(x != -y for x, y in zip(self.letters, self.letters[1:]))

    @classmethod
    def from_pairs(cls, alphabet: Alphabet, pairs: Iterable[tuple[int, int]]) -> "Word":
        return cls(alphabet, tuple((i + 1) * s for i, s in pairs))


def empty(alphabet: Alphabet) -> Word:
    return Word(alphabet, ())


def concat(*words: Word) -> Word:
    if not words:
        raise ValueError("concat needs at least one word")
    alphabet = words[0].alphabet
    out: list[int] = []
    for w in words:
        if w.alphabet != alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        out.extend(w.letters)
    return Word(alphabet, tuple(out))


def reduce_letters(letters: Sequence[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def free_reduce(w: Word) -> Word:
    return Word(w.alphabet, reduce_letters(w.letters))


def invert_letters(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


def invert_word(w: Word) -> Word:
    return Word(w.alphabet, invert_letters(w.letters))


def exponent_vector(w: Word) -> tuple[int, ...]:
    """Signed letter count per generator, in alphabet order."""
    counts = [0] * len(w.alphabet)
    for x in w.letters:
        counts[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(counts)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    tokens = text.split()
    if tokens == ["1"]:
        return Word(alphabet, ())
    letters: list[int] = []
    for token in tokens:
        if token == "1":
            continue
        name, caret, exp = token.partition("^")
        if name not in alphabet:
            raise WordSyntaxError(f"unknown generator in token {token!r}")
        if caret:
            try:
                k = int(exp)
            except ValueError:
                raise WordSyntaxError(f"malformed exponent in token {token!r}") from None
            if exp.startswith("+") or exp != exp.strip():
                raise WordSyntaxError(f"malformed exponent in token {token!r}")
        else:
            k = 1
        x = alphabet.index(name) + 1
        letters.extend([x if k > 0 else -x] * abs(k))
    return Word(alphabet, tuple(letters))


def format_letters(letters: Sequence[int], alphabet: Alphabet, raw: bool = False) -> str:
    if not letters:
        return "1"
    if raw:
        return " ".join(alphabet.name_of(x) + ("^-1" if x < 0 else "") for x in letters)
    parts = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        k = (j - i) * (1 if letters[i] > 0 else -1)
        name = alphabet.name_of(letters[i])
        parts.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(parts)


def format_word(w: Word, raw: bool = False) -> str:
    """Print ``w``; ``raw`` keeps one token per letter so parsing is exact."""
    return format_letters(w.letters, w.alphabet, raw)
