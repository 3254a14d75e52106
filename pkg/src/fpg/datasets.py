"""Built-in presentations for the genus-4 mapping class group and its vertex stabilizers.

Each relation ``L = R`` is stored verbatim as the relator ``L R^-1``; relation
tags follow the source numbering (``main.21b``, ``stab_beta.xvii``).
"""

from __future__ import annotations

from functools import lru_cache

from .presentation import FinitePresentation, PresentationError
from .words import Word, invert


class UnknownDataset(PresentationError):
    def __str__(self):
        return f"unknown dataset {self.args[0]!r} (known: {', '.join(NAMES)})"


def _rel(lhs: str, rhs: str = "1") -> Word:
    return Word.parse(lhs) * invert(Word.parse(rhs))


def _pow(text: str, n: int) -> str:
    return " ".join([text] * n)


_MAIN = (
    ("a1", "a2", "a3", "a4", "b", "u1", "u2", "u3", "t"),
    [
        ("1", "a1 a3", "a3 a1"),
        ("2", "a4 a3", "a3 a4"),
        ("3a", "b a1", "a1 b"),
        ("3b", "b a2", "a2 b"),
        ("3c", "b a3", "a3 b"),
        ("4a", "a1 a2 a1", "a2 a1 a2"),
        ("4b", "a3 a2 a3", "a2 a3 a2"),
        ("4c", "a4 a2 a4", "a2 a4 a2"),
        ("5", _pow("a1 a2 a3", 4), "1"),
        ("6", _pow("a4 a2 a3", 4), "1"),
        ("7", "u3 a1 u3^-1", "a1"),
        ("8", "u3 a3 u3^-1", "a3^-1"),
        ("9", "u3 a2 u3^-1", "a2 a4^-1 a2^-1"),
        ("10", _pow("u3 a4", 2), "1"),
        ("11", _pow("u3 b", 2), "1"),
        ("12", "u3 a4 u3^-1", "u1 a4 u1^-1"),
        ("13", "u1 u3", "u3 u1"),
        ("14", "u1 u1", "u3 u3"),
        ("15", "u1", _pow("a1 a2 a3", 2) + " u3 " + _pow("a1 a2 a3", 2)),
        ("16", "u2", "a3^-1 a2^-1 u3^-1 a2 a3"),
        ("17", "t", "u3 u2 u1 a1 a2 a3"),
        ("18", "t t", "1"),
        ("19", "t u3 t", "u3^-1"),
        ("20", "t b t", "b^-1"),
        ("21a", "t a1", "a1 t"),
        ("21b", "t a2", "a2 t"),
        ("21c", "t a3", "a3 t"),
    ],
)

_STAB_MU1 = (
    ("a2", "a3", "a4", "u2", "u3", "t"),
    [
        ("i", "a3 a4", "a4 a3"),
        ("ii", "a2 a3 a2", "a3 a2 a3"),
        ("iii", "a2 a4 a2", "a4 a2 a4"),
        ("iv", "u3 a3 u3^-1", "a3^-1"),
        ("v", "u3 a2 u3^-1", "a2 a4^-1 a2^-1"),
        ("vi", _pow("u3 a4", 2), "1"),
        ("vii", _pow("a4 a2 a3", 4), "1"),
        ("viii", "t t", "1"),
        ("ix", "t u3 t", "u3^-1"),
        ("x", "t a2", "a2 t"),
        ("xi", "t a3", "a3 t"),
        ("xii", "u2", "a3^-1 a2^-1 u3^-1 a2 a3"),
        ("xiii", "u2 a2 u2^-1", "a2^-1"),
        ("xiv", "t u2 t", "u2^-1"),
    ],
)

# t is used by (viii)-(xii),(xvi) but missing from the printed generator list.
_STAB_DELTA = (
    ("a1", "a3", "u1", "u3", "s", "t"),
    [
        ("i", "u1 a1 u1^-1", "a1^-1"),
        ("ii", "u3 a3 u3^-1", "a3^-1"),
        ("iii", "u1 u1", "u3 u3"),
        ("iv", "u1 u3", "u3 u1"),
        ("v", "a1 u3", "u3 a1"),
        ("vi", "u1 a3", "a3 u1"),
        ("vii", "a1 a3", "a3 a1"),
        ("viii", "t t", "1"),
        ("ix", "t a1", "a1 t"),
        ("x", "t a3", "a3 t"),
        ("xi", "t u1 t", "u1^-1"),
        ("xii", "t u3 t", "u3^-1"),
        ("xiii", "s s", "1"),
        ("xiv", "s a1 s", "a3"),
        ("xv", "s u1 s", "u3"),
        ("xvi", "s t", "t s"),
    ],
)

_STAB_ALPHA3 = (
    ("a1", "a3", "a4", "b", "u1", "u3", "t"),
    [
        ("i", "a1 b", "b a1"),
        ("ii", "u1 a1 u1^-1", "a1^-1"),
        ("iii", "b a4 b^-1", "u1^-1 a4^-1 u1"),
        ("iv", _pow("u1 b", 2), "1"),
        ("v", _pow("u1 a4", 2), "1"),
        ("vi", "a3 b", "b a3"),
        ("vii", "a1 a3", "a3 a1"),
        ("viii", "a3 a4", "a4 a3"),
        ("ix", "a3 u1", "u1 a3"),
        ("x", "u3 u3", "u1 u1"),
        ("xi", "u3 a1", "a1 u3"),
        ("xii", "u3 a3 u3^-1", "a3^-1"),
        ("xiii", "u3 b u3^-1", "u1 b u1^-1"),
        ("xiv", "u3 a4 u3^-1", "u1 a4 u1^-1"),
        ("xv", "u3 u1", "u1 u3"),
        ("xvi", "t t", "1"),
        ("xvii", "t a1", "a1 t"),
        ("xviii", "t a3", "a3 t"),
        ("xix", "t a4 t", "u1^-1 a4^-1 u1"),
        ("xx", "t b t", "b^-1"),
        ("xxi", "t u1 t", "u1^-1"),
        ("xxii", "t u3 t", "u3^-1"),
    ],
)

_STAB_BETA = (
    ("a1", "a2", "a3", "b", "t", "w"),
    [
        ("i", "b a1", "a1 b"),
        ("ii", "b a2", "a2 b"),
        ("iii", "b a3", "a3 b"),
        ("iv", "a1 a3", "a3 a1"),
        ("v", "a1 a2 a1", "a2 a1 a2"),
        ("vi", "a2 a3 a2", "a3 a2 a3"),
        ("vii", _pow("a1 a2 a3", 4), "1"),
        ("viii", "t t", "1"),
        ("ix", "t a1", "a1 t"),
        ("x", "t a2", "a2 t"),
        ("xi", "t a3", "a3 t"),
        ("xii", "t b t", "b^-1"),
        ("xiii", "w w", "1"),
        ("xiv", "w a1 w", "a1^-1"),
        ("xv", "w b", "b w"),
        ("xvi", "w a3 w", "a3^-1"),
        ("xvii", "w a2 w", "a1 a3^-1 a2^-1 a3 a1^-1"),
        ("xviii", "w t", "t w"),
    ],
)

_DATA = {
    "main": _MAIN,
    "stab_mu1": _STAB_MU1,
    "stab_delta": _STAB_DELTA,
    "stab_alpha3": _STAB_ALPHA3,
    "stab_beta": _STAB_BETA,
}

NAMES = tuple(_DATA)

# Stabilizer generators that are not generators of the main presentation.
AMBIENT_WORDS = {
    "s": "a1 a2 a3 a1 a2 a3",
    "w": "u1^-1 u3",
}


def relations(name: str) -> list[tuple[str, str, str]]:
    """The (tag, lhs, rhs) relations of a dataset as printed."""
    try:
        return list(_DATA[name][1])
    except KeyError:
        raise UnknownDataset(name) from None


@lru_cache(maxsize=None)
def builtin(name: str) -> FinitePresentation:
    try:
        gens, rels = _DATA[name]
    except KeyError:
        raise UnknownDataset(name) from None
    return FinitePresentation(gens, tuple((f"{name}.{tag}", _rel(l, r)) for tag, l, r in rels))


def ambient_images(generators) -> dict[str, Word]:
    """Images of stabilizer generators as words over the main generators."""
    return {g: Word.parse(AMBIENT_WORDS.get(g, g)) for g in generators}
