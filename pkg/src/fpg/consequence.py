"""Consequence certificates: products of conjugated relators.

A certificate ``[(u1, r1, e1), ..., (uk, rk, ek)]`` proves that a word ``w``
lies in the normal closure of the relators when
``w == u1 r1^e1 u1^-1 ... uk rk^ek uk^-1`` in the free group.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .presentation import FinitePresentation, PresentationError
from .words import Letter, Word, cyclically_reduce, invert

Factor = tuple[Word, str, int]


@dataclass(frozen=True)
class Certificate:
    factors: tuple[Factor, ...] = ()

    def __post_init__(self):
        fs = []
        for u, name, e in self.factors:
            if e not in (1, -1):
                raise ValueError("factor exponent must be +1 or -1")
            fs.append((u if isinstance(u, Word) else Word.parse(u), name, e))
        object.__setattr__(self, "factors", tuple(fs))

    def __len__(self):
        return len(self.factors)

    def __add__(self, other: Certificate) -> Certificate:
        return Certificate(self.factors + other.factors)

    def inverse(self) -> Certificate:
        return Certificate(tuple((u, n, -e) for u, n, e in reversed(self.factors)))

    def conjugated(self, u: Word) -> Certificate:
        """Certificate for ``u target u^-1``."""
        return Certificate(tuple((u * c, n, e) for c, n, e in self.factors))

    def relators_used(self) -> set[str]:
        return {n for _, n, _ in self.factors}


def expand_certificate(P: FinitePresentation, cert: Certificate) -> Word:
    out: list[Letter] = []
    for u, name, e in cert.factors:
        r = P[name]
        out.extend(u.letters)
        out.extend(r.letters if e == 1 else invert(r).letters)
        out.extend(invert(u).letters)
    return Word(tuple(out))


def check_certificate(P: FinitePresentation, target: Word, cert: Certificate) -> bool:
    return expand_certificate(P, cert) == target


# Serialization


def format_certificate(presentation: str, target: Word, cert: Certificate, claim: str | None = None) -> str:
    lines = []
    if claim:
        lines.append(f"# claim: {claim}")
    lines.append(f"presentation: {presentation}")
    lines.append(f"target: {target}")
    for u, name, e in cert.factors:
        lines.append(f"factor: {u} | {name} | {'+1' if e == 1 else '-1'}")
    return "\n".join(lines) + "\n"


class CertificateSyntaxError(ValueError):
    pass


def parse_certificate(text: str) -> tuple[str, Word, Certificate]:
    pres = target = None
    factors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        rest = rest.strip()
        try:
            if key == "presentation":
                pres = rest
            elif key == "target":
                target = Word.parse(rest)
            elif key == "factor":
                u, name, e = (p.strip() for p in rest.split("|"))
                if e not in ("+1", "-1", "1"):
                    raise ValueError(f"bad exponent {e!r}")
                factors.append((Word.parse(u), name, -1 if e == "-1" else 1))
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise CertificateSyntaxError(f"line {lineno}: {exc}") from None
    if pres is None or target is None:
        raise CertificateSyntaxError("missing 'presentation:' or 'target:' line")
    return pres, target, Certificate(tuple(factors))


# Bounded brute-force search


def shortlex_words(gens: Sequence[str], max_len: int) -> Iterator[Word]:
    """Freely reduced words in shortlex order (letter order: g1, g1^-1, g2, ...)."""
    letters = [(g, e) for g in gens for e in (1, -1)]
    yield Word()
    frontier: list[tuple[Letter, ...]] = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for l in letters:
                if w and w[-1][0] == l[0] and w[-1][1] == -l[1]:
                    continue
                nxt.append(w + (l,))
        for w in nxt:
            yield Word(w)
        frontier = nxt


def _last_factor(P: FinitePresentation, rest: Word, max_conj_len: int) -> Factor | None:
    """Least (conjugator, relator, exponent) with ``u r^e u^-1 == rest``."""
    if not rest:
        return None
    core, v = cyclically_reduce(rest)
    best = None
    for ri, (name, r) in enumerate(P.relators):
        if len(r) != len(core):
            continue
        for e in (1, -1):
            re_ = r if e == 1 else invert(r)
            L = re_.letters
            for i in range(len(L)):
                if L[i:] + L[:i] == core.letters:
                    u = v * invert(Word(L[:i]))
                    if len(u) <= max_conj_len:
                        key = (_shortlex_key(u, P.generators), ri, -e)
                        if best is None or key < best[0]:
                            best = (key, (u, name, e))
    return best[1] if best else None


def _shortlex_key(u: Word, gens: Sequence[str]):
    order = {g: i for i, g in enumerate(gens)}
    return (len(u), tuple(2 * order[n] + (0 if e == 1 else 1) for n, e in u))


def search_certificate(P: FinitePresentation, target: Word, max_factors: int = 8,
                       max_conj_len: int = 8) -> Certificate | None:
    """Iterative deepening over factor count, then conjugator length.

    Returns the first certificate in (factor count, conjugator bound,
    lexicographic factor) order, or ``None`` when the limits are exhausted.
    """
    if max_factors < 0 or max_conj_len < 0:
        raise ValueError("limits must be non-negative")
    if not target:
        return Certificate()
    for k in range(1, max_factors + 1):
        for ell in range(max_conj_len + 1):
            conjs = list(shortlex_words(P.generators, ell))
            choices = [(u, name, e) for u in conjs for name, _ in P.relators for e in (1, -1)]
            found = _dfs(P, target, k, ell, choices)
            if found is not None:
                return Certificate(tuple(found))
    return None


def _dfs(P, rest: Word, k: int, ell: int, choices) -> list[Factor] | None:
    if k == 1:
        f = _last_factor(P, rest, ell)
        return [f] if f else None
    for u, name, e in choices:
        r = P[name] if e == 1 else invert(P[name])
        f_word = u * r * invert(u)
        sub = _dfs(P, invert(f_word) * rest, k - 1, ell, choices)
        if sub is not None:
            return [(u, name, e)] + sub
    return None


# Rewriting derivations


@dataclass(frozen=True)
class _Move:
    pattern: tuple[Letter, ...]  # s
    replacement: tuple[Letter, ...]  # s'
    name: str
    exp: int
    offset: int  # rotation offset in r^exp


def _moves(P: FinitePresentation, names: Iterable[str] | None, insert: bool) -> dict[Letter, list[_Move]]:
    names = list(P.relator_names if names is None else names)
    by_first: dict[Letter, list[_Move]] = {}
    seen = set()
    for name in names:
        r = P[name]
        for e in (1, -1):
            L = (r if e == 1 else invert(r)).letters
            m = len(L)
            for i in range(m):
                rho = L[i:] + L[:i]
                for k in range(1, m + 1):
                    s = rho[:k]
                    s2 = invert(Word(rho[k:])).letters
                    key = (s, s2)
                    if key in seen:
                        continue
                    seen.add(key)
                    by_first.setdefault(s[0], []).append(_Move(s, s2, name, e, i))
    return by_first


def _step_factor(prefix: tuple[Letter, ...], mv: _Move, P: FinitePresentation) -> Factor:
    L = (P[mv.name] if mv.exp == 1 else invert(P[mv.name])).letters
    y = Word(L[: mv.offset])
    return (Word(prefix) * invert(y), mv.name, mv.exp)


def _neighbours(word: tuple[Letter, ...], moves, max_len: int):
    n = len(word)
    for i in range(n):
        for mv in moves.get(word[i], ()):
            k = len(mv.pattern)
            if word[i : i + k] == mv.pattern:
                new = Word(word[:i] + mv.replacement + word[i + k :]).letters
                if len(new) <= max_len:
                    yield new, (word[:i], mv)


@dataclass
class DerivationResult:
    certificate: Certificate
    steps: int
    explored: int


def search_derivation(P: FinitePresentation, source: Word, target: Word,
                      relators: Iterable[str] | None = None, max_steps: int = 3,
                      max_len: int | None = None, max_nodes: int = 2_000_000) -> DerivationResult | None:
    """Bidirectional breadth-first search for ``source == F target`` by relator substitutions.

    Each substitution replaces a subword ``s`` by ``s'`` where ``s s'^-1`` is a
    cyclic rotation of a relator or its inverse.  On success the returned
    certificate ``F`` satisfies ``source target^-1 == expand(F)``.
    """
    moves = _moves(P, relators, insert=False)
    if max_len is None:
        max_len = max(len(source), len(target)) + 4
    src, dst = source.letters, target.letters
    if src == dst:
        return DerivationResult(Certificate(), 0, 1)
    parents = [{src: None}, {dst: None}]
    frontiers = [[src], [dst]]
    depth = [0, 0]
    explored = 0
    while depth[0] + depth[1] < max_steps and (frontiers[0] or frontiers[1]):
        side = 0 if (len(frontiers[0]) <= len(frontiers[1]) and frontiers[0]) or not frontiers[1] else 1
        nxt = []
        par, other = parents[side], parents[1 - side]
        for w in frontiers[side]:
            for new, how in _neighbours(w, moves, max_len):
                if new in par:
                    continue
                par[new] = (w, how)
                explored += 1
                if new in other:
                    return DerivationResult(_join(P, parents, new), depth[0] + depth[1] + 1, explored)
                nxt.append(new)
                if explored > max_nodes:
                    return None
        frontiers[side] = nxt
        depth[side] += 1
    return None


def _path_factors(P, par, node) -> list[Factor]:
    """Factors F with start == F * node (start = root of this tree)."""
    out = []
    while par[node] is not None:
        prev, (prefix, mv) = par[node]
        out.append(_step_factor(prefix, mv, P))
        node = prev
    out.reverse()
    return out


def _join(P, parents, meet) -> Certificate:
    fwd = Certificate(tuple(_path_factors(P, parents[0], meet)))
    bwd = Certificate(tuple(_path_factors(P, parents[1], meet)))
    # source = F meet, target = G meet  =>  source target^-1 = F G^-1
    return fwd + bwd.inverse()


def derive_chain(P: FinitePresentation, chain: Sequence[tuple[Word | str, Iterable[str] | None]],
                 max_steps: int = 3, max_len: int | None = None) -> Certificate:
    """Certificate for ``chain[0] chain[-1]^-1`` from consecutive rewriting steps.

    ``chain`` is a list of ``(word, hint)`` pairs; ``hint`` lists the relators
    allowed for the step leading *to* that word (ignored for the first entry).
    """
    words = [Word.parse(wd) if isinstance(wd, str) else wd for wd, _ in chain]
    cert = Certificate()
    for (prev, nxt), (_, hint) in zip(zip(words, words[1:]), chain[1:]):
        res = search_derivation(P, prev, nxt, hint, max_steps=max_steps, max_len=max_len)
        if res is None:
            raise LookupError(f"no derivation {prev} -> {nxt} via {hint}")
        # prev nxt^-1 = F  and  w0 = C prev  =>  w0 = C F nxt
        cert = cert + res.certificate
    return cert


def greedy_reduce(P: FinitePresentation, word: Word, relators: Iterable[str] | None = None,
                  max_len: int | None = None, max_nodes: int = 200_000) -> Certificate | None:
    """Best-first search (shortest word first) from ``word`` to the empty word."""
    moves = _moves(P, relators, insert=False)
    if max_len is None:
        max_len = len(word) + 4
    start = word.letters
    par = {start: None}
    heap = [(len(start), 0, start)]
    tie = itertools.count(1)
    while heap and len(par) < max_nodes:
        _, _, w = heapq.heappop(heap)
        if not w:
            return Certificate(tuple(_path_factors(P, par, w)))
        for new, how in _neighbours(w, moves, max_len):
            if new not in par:
                par[new] = (w, how)
                heapq.heappush(heap, (len(new), next(tie), new))
    return None


def inline_lemmas(cert: Certificate, lemmas: dict[str, tuple[Word, Certificate]]) -> Certificate:
    """Replace factors naming a proven lemma by that lemma's own certificate.

    A lemma ``name -> (word, proof)`` acts as an auxiliary relator whose stored
    form is the cyclic core of ``word``.
    """
    out: list[Factor] = []
    for u, name, e in cert.factors:
        if name not in lemmas:
            out.append((u, name, e))
            continue
        word, proof = lemmas[name]
        _, v = cyclically_reduce(word)
        # word = v core v^-1, so core = v^-1 word v
        sub = proof.conjugated(invert(v))
        if e == -1:
            sub = sub.inverse()
        out.extend(sub.conjugated(u).factors)
    return Certificate(tuple(out))


# Shipped corpus

CorpusEntry = tuple[str, Word, Certificate]


def _corpus_files():
    root = resources.files("fpg") / "data" / "corpus"
    return sorted((f for f in root.iterdir() if f.name.endswith(".cert")), key=lambda f: f.name)


def _claim_line(text: str) -> str:
    for line in text.splitlines():
        if line.startswith("# claim:"):
            return line[len("# claim:"):].strip()
    return ""


def corpus() -> dict[str, CorpusEntry]:
    """Claim name -> (presentation name, target word, certificate)."""
    out = {}
    for f in _corpus_files():
        out[f.name[:-len(".cert")]] = parse_certificate(f.read_text())
    return out


def corpus_claims() -> dict[str, str]:
    """Human-readable statement of each corpus claim."""
    return {f.name[:-len(".cert")]: _claim_line(f.read_text()) for f in _corpus_files()}


@dataclass
class DerivationReport:
    entries: list[tuple[str, Word, bool]]

    @property
    def passed(self) -> int:
        return sum(ok for _, _, ok in self.entries)

    @property
    def ok(self) -> bool:
        return all(ok for _, _, ok in self.entries)

    def failures(self) -> list[str]:
        return [name for name, _, ok in self.entries if not ok]


def verify_corpus(lookup: Callable[[str], FinitePresentation] | Mapping[str, FinitePresentation] | None = None,
                  entries: Mapping[str, CorpusEntry] | None = None) -> DerivationReport:
    """Check every corpus certificate; ``lookup`` resolves presentation names.

    A certificate naming a relator the presentation lacks counts as a failure.
    """
    if lookup is None:
        from .datasets import builtin as lookup
    elif isinstance(lookup, Mapping):
        lookup = lookup.__getitem__
    if entries is None:
        entries = corpus()
    rows = []
    for name, (pres, target, cert) in sorted(entries.items()):
        try:
            ok = check_certificate(lookup(pres), target, cert)
        except (PresentationError, KeyError):
            ok = False
        rows.append((name, target, ok))
    return DerivationReport(rows)
