"""Finite presentations, their text format, and Tietze transformations."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable

from .words import (
    IDENT,
    Word,
    WordSyntaxError,
    apply_map,
    cyclically_reduce,
    invert,
    rotations,
)

if TYPE_CHECKING:
    from .consequence import Certificate

log = logging.getLogger(__name__)

_NAME = re.compile(r"[A-Za-z0-9_.]+")


class PresentationError(ValueError):
    pass


class PresentationSyntaxError(PresentationError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class UnknownSymbol(PresentationError):
    pass


class UnknownGenerator(PresentationError):
    pass


class UnknownRelator(PresentationError):
    pass


class DuplicateGenerator(PresentationError):
    pass


class NotSolvable(PresentationError):
    pass


class InvalidCertificate(PresentationError):
    pass


@dataclass(frozen=True)
class FinitePresentation:
    """Generators plus named relators; relators are kept cyclically reduced."""

    generators: tuple[str, ...]
    relators: tuple[tuple[str, Word], ...] = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            dup = next(g for g in gens if gens.count(g) > 1)
            raise DuplicateGenerator(dup)
        for g in gens:
            if not IDENT.fullmatch(g):
                raise PresentationError(f"bad generator name {g!r}")
        gset = set(gens)
        rels = []
        seen_names = set()
        for name, word in self.relators:
            if name in seen_names:
                raise PresentationError(f"duplicate relator name {name!r}")
            seen_names.add(name)
            extra = word.symbols() - gset
            if extra:
                raise UnknownSymbol(sorted(extra)[0])
            rels.append((name, cyclically_reduce(word)[0]))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))
        object.__setattr__(self, "_index", {n: i for i, (n, _) in enumerate(rels)})
        for a, b in duplicate_relators(self):
            log.info("relator %s duplicates %s up to rotation/inversion", b, a)

    @classmethod
    def make(cls, generators: Iterable[str], relators: Iterable[tuple[str, Word | str]]):
        rels = [(n, r if isinstance(r, Word) else Word.parse(r)) for n, r in relators]
        return cls(tuple(generators), tuple(rels))

    def __getitem__(self, name: str) -> Word:
        try:
            return self.relators[self._index[name]][1]
        except KeyError:
            raise UnknownRelator(name) from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    @property
    def relator_names(self) -> list[str]:
        return [n for n, _ in self.relators]

    @property
    def words(self) -> list[Word]:
        return [r for _, r in self.relators]

    def restrict(self, names: Iterable[str]) -> FinitePresentation:
        """Same generators, only the listed relators (in presentation order)."""
        keep = set(names)
        for n in keep:
            self[n]
        return FinitePresentation(self.generators, tuple(r for r in self.relators if r[0] in keep))

    def with_relators(self, extra: Iterable[tuple[str, Word]]) -> FinitePresentation:
        return FinitePresentation(self.generators, self.relators + tuple(extra))

    def without(self, name: str) -> FinitePresentation:
        self[name]
        return FinitePresentation(self.generators, tuple(r for r in self.relators if r[0] != name))

    def serialize(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += [f"rel {n}: {r}" for n, r in self.relators]
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.serialize()


def _canonical_cyclic(word: Word) -> tuple:
    if not word:
        return ()
    cands = [r.letters for r in rotations(word)] + [r.letters for r in rotations(invert(word))]
    return min(cands)


def duplicate_relators(P: FinitePresentation) -> list[tuple[str, str]]:
    """Pairs (first, later) of relators equal up to cyclic rotation and inversion."""
    seen: dict[tuple, str] = {}
    dups = []
    for name, r in P.relators:
        key = _canonical_cyclic(r)
        if key in seen:
            dups.append((seen[key], name))
        else:
            seen[key] = name
    return dups


def parse_presentation(text: str) -> FinitePresentation:
    gens: list[str] | None = None
    rels: list[tuple[str, Word]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if gens is None:
            if not line.startswith("gens:"):
                raise PresentationSyntaxError(lineno, "expected 'gens:' header")
            gens = line[len("gens:") :].split()
            for g in gens:
                if not IDENT.fullmatch(g):
                    raise PresentationSyntaxError(lineno, f"bad generator name {g!r}")
            continue
        m = re.fullmatch(r"rel\s+([^:\s]+)\s*:(.*)", line)
        if m is None:
            raise PresentationSyntaxError(lineno, "expected 'rel <name>: <word>'")
        name, body = m.group(1), m.group(2)
        if not _NAME.fullmatch(name):
            raise PresentationSyntaxError(lineno, f"bad relator name {name!r}")
        try:
            word = Word.parse(body)
        except WordSyntaxError as exc:
            raise PresentationSyntaxError(lineno, str(exc)) from None
        rels.append((name, word))
    if gens is None:
        raise PresentationSyntaxError(1, "missing 'gens:' header")
    try:
        return FinitePresentation(tuple(gens), tuple(rels))
    except DuplicateGenerator:
        raise
    except UnknownSymbol:
        raise
    except PresentationError as exc:
        raise PresentationSyntaxError(0, str(exc)) from None


# Tietze moves


def tietze_add_generator(P: FinitePresentation, name: str, defining: Word | str,
                         relator_name: str | None = None) -> FinitePresentation:
    """Add ``name`` with the defining relator ``name * defining^-1``."""
    if isinstance(defining, str):
        defining = Word.parse(defining)
    if name in P.generators:
        raise DuplicateGenerator(name)
    extra = defining.symbols() - set(P.generators)
    if extra:
        raise UnknownSymbol(sorted(extra)[0])
    rname = relator_name or f"def.{name}"
    rel = Word.gen(name) * invert(defining)
    return FinitePresentation(P.generators + (name,), P.relators + ((rname, rel),))


def solve_for(relator: Word, g: str) -> Word:
    """Express ``g`` from a relator in which it occurs exactly once."""
    n = relator.occurrences(g)
    if n != 1:
        raise NotSolvable(f"{g} occurs {n} times")
    L = relator.letters
    i = next(k for k, (s, _) in enumerate(L) if s == g)
    e = L[i][1]
    # relator = p g^e q  =>  g^e = p^-1 q^-1
    p, q = Word(L[:i]), Word(L[i + 1 :])
    sol = invert(p) * invert(q)
    return sol if e == 1 else invert(sol)


def tietze_eliminate(P: FinitePresentation, g: str, relator: str) -> FinitePresentation:
    if g not in P.generators:
        raise UnknownGenerator(g)
    r = P[relator]
    sol = solve_for(r, g)
    images = {x: Word.gen(x) for x in P.generators if x != g}
    images[g] = sol
    rels = tuple((n, apply_map(w, images)) for n, w in P.relators if n != relator)
    return FinitePresentation(tuple(x for x in P.generators if x != g), rels)


def tietze_add_relator(P: FinitePresentation, word: Word | str, cert: Certificate,
                       name: str | None = None) -> FinitePresentation:
    from .consequence import check_certificate

    if isinstance(word, str):
        word = Word.parse(word)
    if not check_certificate(P, word, cert):
        raise InvalidCertificate(str(word))
    if name is None:
        k = len(P.relators) + 1
        while f"added.{k}" in P:
            k += 1
        name = f"added.{k}"
    return P.with_relators([(name, word)])


def tietze_remove_relator(P: FinitePresentation, relator: str, cert: Certificate) -> FinitePresentation:
    from .consequence import check_certificate

    target = P[relator]
    rest = P.without(relator)
    try:
        ok = check_certificate(rest, target, cert)
    except UnknownRelator:
        ok = False
    if not ok:
        raise InvalidCertificate(relator)
    return rest
