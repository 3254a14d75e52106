"""Free-group words over named generators.

A word is an immutable, freely reduced tuple of letters ``(name, exp)`` with
``exp`` in ``{+1, -1}``.  Text form: whitespace-separated letters, ``x^-1`` for
an inverse letter, ``1`` for the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_LETTER = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(\^-1)?")

Letter = tuple[str, int]


class WordSyntaxError(ValueError):
    pass


class MissingImage(KeyError):
    """A generator occurring in a word has no assigned image."""

    def __init__(self, symbol: str):
        super().__init__(symbol)
        self.symbol = symbol


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for name, e in letters:
        if out and out[-1][0] == name and out[-1][1] == -e:
            out.pop()
        else:
            out.append((name, e))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for name, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")
            if not IDENT.fullmatch(name):
                raise ValueError(f"bad generator name {name!r}")
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def parse(cls, text: str) -> Word:
        text = text.strip()
        if text in ("", "1"):
            return cls()
        letters = []
        for tok in text.split():
            m = _LETTER.fullmatch(tok)
            if m is None:
                raise WordSyntaxError(f"bad letter {tok!r}")
            letters.append((m.group(1), -1 if m.group(2) else 1))
        return cls(tuple(letters))

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> Word:
        return cls(((name, exp),))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(n if e == 1 else f"{n}^-1" for n, e in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def __invert__(self) -> Word:
        return invert(self)

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else invert(self)
        return Word(base.letters * abs(n))

    def symbols(self) -> set[str]:
        return {n for n, _ in self.letters}

    def exponent_sum(self, name: str) -> int:
        return sum(e for n, e in self.letters if n == name)

    def occurrences(self, name: str) -> int:
        return sum(1 for n, _ in self.letters if n == name)


def w(text: str) -> Word:
    """Shorthand for :meth:`Word.parse`."""
    return Word.parse(text)


def reduce(letters: Iterable[Letter] | Word) -> Word:
    if isinstance(letters, Word):
        return letters
    return Word(tuple(letters))


def multiply(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters)


def invert(u: Word) -> Word:
    return Word(tuple((n, -e) for n, e in reversed(u.letters)))


def conjugate(word: Word, u: Word) -> Word:
    """Return ``u word u^-1``."""
    return Word(u.letters + word.letters + invert(u).letters)


def cyclically_reduce(word: Word) -> tuple[Word, Word]:
    """Split ``word`` as ``conjugator core conjugator^-1`` with ``core`` cyclically reduced."""
    letters = word.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        i += 1
        j -= 1
    return Word(letters[i : j + 1]), Word(letters[:i])


def is_cyclically_reduced(word: Word) -> bool:
    if len(word) < 2:
        return True
    (a, e), (b, f) = word.letters[0], word.letters[-1]
    return not (a == b and e == -f)


def rotations(word: Word) -> list[Word]:
    """All cyclic rotations of a cyclically reduced word."""
    L = word.letters
    return [Word(L[i:] + L[:i]) for i in range(max(len(L), 1))]


def apply_map(word: Word, images: Mapping[str, Word]) -> Word:
    out: list[Letter] = []
    for name, e in word.letters:
        try:
            img = images[name]
        except KeyError:
            raise MissingImage(name) from None
        out.extend(img.letters if e == 1 else invert(img).letters)
    return Word(tuple(out))


def commutator(x: Word, y: Word) -> Word:
    return x * y * ~x * ~y
