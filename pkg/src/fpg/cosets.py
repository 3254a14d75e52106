"""Todd-Coxeter coset enumeration (HLT with lookahead, optional Felsch).

Cosets are numbered from 1; coset 1 is the subgroup.  Columns are
``2k`` for generator ``k`` and ``2k+1`` for its inverse; entry 0 means
undefined.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Sequence

from .presentation import FinitePresentation
from .words import Word

log = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 1_000_000


def default_max_cosets() -> int:
    env = os.environ.get("FPG_MAX_COSETS")
    return int(env) if env else DEFAULT_MAX_COSETS


class IncompleteTable(ValueError):
    pass


@dataclass(frozen=True)
class CosetTable:
    generators: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]  # rows[c-1][col]

    @property
    def n_cosets(self) -> int:
        return len(self.rows)

    def __getitem__(self, key):
        c, col = key
        return self.rows[c - 1][col]

    def column(self, name: str, exp: int = 1) -> int:
        return 2 * self.generators.index(name) + (0 if exp == 1 else 1)

    def is_complete(self) -> bool:
        return all(all(v for v in row) for row in self.rows)


@dataclass(frozen=True)
class Completed:
    index: int
    table: CosetTable


@dataclass(frozen=True)
class CapExceeded:
    cosets_used: int


EnumerationOutcome = Completed | CapExceeded


def _columns(word: Word, gidx: dict[str, int]) -> list[int]:
    return [2 * gidx[n] + (0 if e == 1 else 1) for n, e in word]


class _Enumerator:
    def __init__(self, P: FinitePresentation, subgroup: Sequence[Word], max_cosets: int):
        self.gens = P.generators
        gidx = {g: i for i, g in enumerate(self.gens)}
        self.ncols = 2 * len(self.gens)
        self.rels = [_columns(r, gidx) for r in P.words if r]
        self.subgroup = [_columns(h, gidx) for h in subgroup]
        self.max_cosets = max_cosets
        nc = self.ncols
        # row 0 is a dummy so that coset c occupies table[c*nc:(c+1)*nc]
        self.table = [0] * (2 * nc)
        self.p = [0, 1]
        self.n = 1  # highest allocated coset id
        self.live = 1
        self.queue: list[int] = []
        self.deductions: list[tuple[int, int]] = []
        self.track_deductions = False

    # union-find

    def rep(self, c: int) -> int:
        p = self.p
        r = c
        while p[r] != r:
            r = p[r]
        while p[c] != r:
            p[c], c = r, p[c]
        return r

    def merge(self, a: int, b: int):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = (a, b) if a < b else (b, a)
            self.p[hi] = lo
            self.live -= 1
            self.queue.append(hi)

    def coincidence(self, a: int, b: int):
        T, nc = self.table, self.ncols
        self.queue = []
        self.merge(a, b)
        i = 0
        q = self.queue
        while i < len(q):
            e = q[i]
            i += 1
            base = e * nc
            for x in range(nc):
                f = T[base + x]
                if f:
                    xi = x ^ 1
                    T[f * nc + xi] = 0
                    e1, f1 = self.rep(e), self.rep(f)
                    g = T[e1 * nc + x]
                    if g:
                        self.merge(f1, g)
                    else:
                        h = T[f1 * nc + xi]
                        if h:
                            self.merge(e1, h)
                        else:
                            T[e1 * nc + x] = f1
                            T[f1 * nc + xi] = e1
                            if self.track_deductions:
                                self.deductions.append((e1, x))

    # definitions

    def define(self, c: int, x: int) -> bool:
        if self.n >= self.max_cosets:
            return False
        self.n += 1
        d = self.n
        self.p.append(d)
        self.table.extend([0] * self.ncols)
        self.live += 1
        T, nc = self.table, self.ncols
        T[c * nc + x] = d
        T[d * nc + (x ^ 1)] = c
        if self.track_deductions:
            self.deductions.append((c, x))
        return True

    def scan(self, c: int, word: list[int], fill: bool) -> bool:
        """Trace ``word`` at ``c``; returns False only when a needed definition hit the cap."""
        T, nc = self.table, self.ncols
        while True:
            f, i = c, 0
            end = len(word)
            while i < end:
                nxt = T[f * nc + word[i]]
                if not nxt:
                    break
                f = nxt
                i += 1
            if i == end:
                if f != c:
                    self.coincidence(f, c)
                return True
            b, j = c, end - 1
            while j >= i:
                nxt = T[b * nc + (word[j] ^ 1)]
                if not nxt:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return True
            if j == i:
                x = word[i]
                T[f * nc + x] = b
                T[b * nc + (x ^ 1)] = f
                if self.track_deductions:
                    self.deductions.append((f, x))
                return True
            if not fill:
                return True
            if not self.define(f, word[i]):
                return False

    def lookahead(self):
        c = 1
        while c <= self.n:
            if self.p[c] == c:
                for r in self.rels:
                    self.scan(c, r, fill=False)
                    if self.p[c] != c:
                        break
            c += 1

    def compact(self) -> dict[int, int]:
        """Renumber live cosets densely (order preserving); returns old->new."""
        nc = self.ncols
        T = self.table
        new = {}
        for c in range(1, self.n + 1):
            if self.p[c] == c:
                new[c] = len(new) + 1
        table = [0] * ((len(new) + 1) * nc)
        for old, nw in new.items():
            ob, nb = old * nc, nw * nc
            for x in range(nc):
                v = T[ob + x]
                if v:
                    table[nb + x] = new[self.rep(v)]
        self.table = table
        self.n = len(new)
        self.p = list(range(self.n + 1))
        self.live = self.n
        return new

    def alive(self, c: int) -> bool:
        return c <= self.n and self.p[c] == c

    def run_hlt(self) -> bool:
        for h in self.subgroup:
            if not self._guarded(lambda: self.scan(1, h, fill=True)):
                return False
        c = 1
        nc = self.ncols
        while c <= self.n:
            if self.alive(c):
                for r in self.rels:
                    if not self.alive(c):
                        break
                    while not self.scan(c, r, fill=True):
                        c = self._relieve(c)
                        if c is None:
                            return False
                        if not self.alive(c):
                            break
                if self.alive(c):
                    for x in range(nc):
                        if not self.table[c * nc + x]:
                            while not self.define(c, x):
                                c = self._relieve(c)
                                if c is None:
                                    return False
                            if not self.alive(c):
                                break
            c += 1
        return True

    def run_felsch(self) -> bool:
        self.track_deductions = True
        rots: dict[int, set] = {}
        for r in self.rels:
            for i in range(len(r)):
                rot = r[i:] + r[:i]
                for cand in (rot, [x ^ 1 for x in reversed(rot)]):
                    rots.setdefault(cand[0], set()).add(tuple(cand))
        self.rot_by_col = {k: [list(v) for v in sorted(vals)] for k, vals in rots.items()}
        for h in self.subgroup:
            if not self._guarded(lambda: self.scan(1, h, fill=True)):
                return False
            self._process_deductions()
        nc = self.ncols
        c = 1
        while c <= self.n:
            if self.alive(c):
                for x in range(nc):
                    if self.alive(c) and not self.table[c * nc + x]:
                        if not self.define(c, x):
                            return False
                        self._process_deductions()
            c += 1
        return True

    def _process_deductions(self):
        T, nc = self.table, self.ncols
        while self.deductions:
            c, x = self.deductions.pop()
            if not self.alive(c):
                continue
            for r in self.rot_by_col.get(x, ()):
                self.scan(c, r, fill=False)
                if not self.alive(c):
                    break
            d = T[c * nc + x] if self.alive(c) else 0
            if d and self.alive(d):
                for r in self.rot_by_col.get(x ^ 1, ()):
                    self.scan(d, r, fill=False)
                    if not self.alive(d):
                        break

    def _guarded(self, step) -> bool:
        while not step():
            if self._relieve(1) is None:
                return False
        return True

    def _relieve(self, c: int):
        """Lookahead plus compaction when the cap is hit; returns the new scan position."""
        before = self.live
        self.lookahead()
        if self.live == self.n and before == self.n:
            return None
        mapping = self.compact()
        log.debug("lookahead: %d -> %d live cosets", before, self.live)
        if self.n >= self.max_cosets:
            return None
        # resume at c if it survived, else at the next surviving coset
        while c not in mapping and c <= max(mapping, default=0):
            c += 1
        if c not in mapping:
            return self.n + 1
        return mapping[c]

    def standardized(self) -> CosetTable:
        nc = self.ncols
        T = self.table
        order = [1]
        pos = {1: 1}
        i = 0
        while i < len(order):
            c = order[i]
            i += 1
            for x in range(nc):
                d = self.rep(T[c * nc + x]) if T[c * nc + x] else 0
                if d and d not in pos:
                    pos[d] = len(order) + 1
                    order.append(d)
        rows = []
        for c in order:
            rows.append(tuple(pos[self.rep(T[c * nc + x])] if T[c * nc + x] else 0 for x in range(nc)))
        return CosetTable(self.gens, tuple(rows))


def todd_coxeter(P: FinitePresentation, subgroup_gens: Sequence[Word | str] = (),
                 max_cosets: int | None = None, strategy: str = "hlt") -> EnumerationOutcome:
    if max_cosets is None:
        max_cosets = default_max_cosets()
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    H = [Word.parse(h) if isinstance(h, str) else h for h in subgroup_gens]
    en = _Enumerator(P, H, max_cosets)
    if strategy == "hlt":
        ok = en.run_hlt()
    elif strategy == "felsch":
        ok = en.run_felsch()
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if not ok:
        return CapExceeded(en.n)
    table = en.standardized()
    if not table.is_complete():
        return CapExceeded(en.n)
    return Completed(table.n_cosets, table)


def trace(table: CosetTable, c: int, word: Word) -> int:
    for name, e in word:
        c = table[c, table.column(name, e)]
        if not c:
            return 0
    return c


def verify_table(P: FinitePresentation, subgroup_gens: Sequence[Word | str], table: CosetTable) -> bool:
    """Independent audit: consistency, relator closure at every coset, subgroup fixes coset 1."""
    if tuple(table.generators) != tuple(P.generators):
        return False
    n = table.n_cosets
    for c in range(1, n + 1):
        row = table.rows[c - 1]
        if len(row) != 2 * len(P.generators):
            return False
        for col, d in enumerate(row):
            if not 1 <= d <= n:
                return False
            if table[d, col ^ 1] != c:
                return False
    for r in P.words:
        for c in range(1, n + 1):
            if trace(table, c, r) != c:
                return False
    for h in subgroup_gens:
        h = Word.parse(h) if isinstance(h, str) else h
        if trace(table, 1, h) != 1:
            return False
    return True


def permutation_rep(outcome: EnumerationOutcome) -> dict[str, tuple[int, ...]]:
    """Generator -> permutation of 1..index as a tuple ``perm[i-1] = image of i``."""
    if not isinstance(outcome, Completed) or not outcome.table.is_complete():
        raise IncompleteTable("enumeration did not complete")
    T = outcome.table
    return {
        g: tuple(T[c, 2 * k] for c in range(1, T.n_cosets + 1)) for k, g in enumerate(T.generators)
    }
