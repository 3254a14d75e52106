"""Presentations of groups acting on simplicial complexes, from orbit data.

Input is a quotient complex: vertices carrying stabilizer presentations,
oriented edges carrying a transfer element ``g_E`` and generator images into
both endpoint stabilizers, a spanning tree, and triangles with correction words
``(phi, psi, eta)``.  The assembler emits

* the relators of every (non-delegated) vertex,
* ``g_E`` for each tree edge,
* ``g_E^-1 i_E(x) g_E c_E(x)^-1`` for each edge generator ``x``,
* ``g_A phi g_B psi g_C^-1 eta^-1`` for each triangle.

For a triangle with edges A, B, C we require ``i(C) = i(A) = U``,
``t(A) = i(B) = V`` and ``t(B) = t(C) = W``; then ``phi`` is a word over
``G_V``, ``psi`` over ``G_W`` and ``eta`` over ``G_U``.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Mapping

from .presentation import FinitePresentation, PresentationError
from .words import Word, WordSyntaxError, apply_map


class ComplexError(ValueError):
    pass


class ComplexSyntaxError(ComplexError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class DanglingReference(ComplexError):
    pass


class NotSpanningTree(ComplexError):
    pass


class IncompatibleTriangle(ComplexError):
    pass


class ImageOverWrongAlphabet(ComplexError):
    pass


@dataclass
class VertexData:
    name: str
    presentation: FinitePresentation
    pres_name: str = ""
    delegated_to: str | None = None


@dataclass
class EdgeData:
    name: str
    source: str
    target: str
    in_tree: bool = False
    g: Word = field(default_factory=Word)
    # (symbol, image in source stabilizer, image in target stabilizer)
    edge_gens: list[tuple[str, Word, Word]] = field(default_factory=list)
    delegated: bool = False


@dataclass
class TriangleData:
    name: str
    edges: tuple[tuple[str, bool], tuple[str, bool], tuple[str, bool]]  # (edge, reversed)
    phi: Word = field(default_factory=Word)
    psi: Word = field(default_factory=Word)
    eta: Word = field(default_factory=Word)


@dataclass
class OrbitComplexData:
    vertices: dict[str, VertexData]
    edges: dict[str, EdgeData]
    triangles: dict[str, TriangleData]

    def tree(self) -> list[EdgeData]:
        return [e for e in self.edges.values() if e.in_tree]

    def home(self, vertex: str) -> str:
        """The vertex whose generators stand for ``vertex``'s stabilizer."""
        seen = set()
        while self.vertices[vertex].delegated_to is not None:
            if vertex in seen:
                raise DanglingReference(f"delegation cycle through {vertex}")
            seen.add(vertex)
            vertex = self.vertices[vertex].delegated_to
        return vertex

    def alphabet(self, vertex: str) -> tuple[str, ...]:
        return self.vertices[self.home(vertex)].presentation.generators

    def ends(self, edge: str, reversed_: bool = False) -> tuple[str, str]:
        e = self.edges[edge]
        return (e.target, e.source) if reversed_ else (e.source, e.target)

    def validate(self) -> OrbitComplexData:
        V = self.vertices
        for v in V.values():
            if v.delegated_to is not None and v.delegated_to not in V:
                raise DanglingReference(f"vertex {v.name}: unknown delegate {v.delegated_to}")
        for v in V:
            self.home(v)
        for e in self.edges.values():
            for end in (e.source, e.target):
                if end not in V:
                    raise DanglingReference(f"edge {e.name}: unknown vertex {end}")
        for t in self.triangles.values():
            for name, _ in t.edges:
                if name not in self.edges:
                    raise DanglingReference(f"triangle {t.name}: unknown edge {name}")
            (iA, tA), (iB, tB), (iC, tC) = (self.ends(n, r) for n, r in t.edges)
            if not (iC == iA and tA == iB and tB == tC):
                raise IncompatibleTriangle(t.name)
        _check_tree(list(V), self.tree())
        return self


def _check_tree(vertices: list[str], tree: list[EdgeData]) -> None:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in tree:
        a, b = find(e.source), find(e.target)
        if a == b:
            raise NotSpanningTree(f"tree edge {e.name} closes a cycle")
        parent[a] = b
    if len({find(v) for v in vertices}) > 1:
        raise NotSpanningTree("tree edges do not connect all vertices")


# Text format


def _word(text: str, lineno: int) -> Word:
    try:
        return Word.parse(text)
    except (WordSyntaxError, ValueError) as exc:
        raise ComplexSyntaxError(lineno, str(exc)) from None


def _keyvals(tokens: list[str], lineno: int, allowed: set[str]) -> tuple[dict[str, str], list[str]]:
    kv, flags = {}, []
    for tok in tokens:
        if "=" in tok:
            k, _, v = tok.partition("=")
            if k not in allowed:
                raise ComplexSyntaxError(lineno, f"unknown key {k!r}")
            kv[k] = v
        else:
            flags.append(tok)
    return kv, flags


def _edge_ref(text: str) -> tuple[str, bool]:
    return (text[:-1], True) if text.endswith("!") else (text, False)


def parse_complex(text: str, lookup: Callable[[str], FinitePresentation] | None = None) -> OrbitComplexData:
    """Parse the line-oriented complex format.

    ``vertex NAME pres=P [delegate=V]``, ``edge NAME SRC DST [tree] [delegated] g=WORD``
    followed by indented ``gen SYM src=WORD dst=WORD`` lines, and
    ``triangle NAME A=E[!] B=E[!] C=E[!] phi=W psi=W eta=W``.  Words containing
    spaces must be quoted; ``#`` starts a comment.
    """
    if lookup is None:
        from .datasets import builtin as lookup
    vertices: dict[str, VertexData] = {}
    edges: dict[str, EdgeData] = {}
    triangles: dict[str, TriangleData] = {}
    current: EdgeData | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        try:
            toks = shlex.split(raw, comments=True)
        except ValueError as exc:
            raise ComplexSyntaxError(lineno, str(exc)) from None
        if not toks:
            continue
        kind, rest = toks[0], toks[1:]
        if kind == "gen":
            if current is None or not raw[:1].isspace():
                raise ComplexSyntaxError(lineno, "'gen' must be indented under an edge")
            if len(rest) < 1:
                raise ComplexSyntaxError(lineno, "missing generator symbol")
            kv, extra = _keyvals(rest[1:], lineno, {"src", "dst"})
            if extra or set(kv) != {"src", "dst"}:
                raise ComplexSyntaxError(lineno, "expected 'gen SYM src=WORD dst=WORD'")
            current.edge_gens.append((rest[0], _word(kv["src"], lineno), _word(kv["dst"], lineno)))
            continue
        current = None
        if kind == "vertex":
            if not rest:
                raise ComplexSyntaxError(lineno, "missing vertex name")
            kv, extra = _keyvals(rest[1:], lineno, {"pres", "delegate"})
            if extra or "pres" not in kv:
                raise ComplexSyntaxError(lineno, "expected 'vertex NAME pres=P [delegate=V]'")
            try:
                P = lookup(kv["pres"])
            except (PresentationError, KeyError):
                raise DanglingReference(f"vertex {rest[0]}: unknown presentation {kv['pres']}") from None
            _add(vertices, rest[0], VertexData(rest[0], P, kv["pres"], kv.get("delegate")), lineno)
        elif kind == "edge":
            if len(rest) < 3:
                raise ComplexSyntaxError(lineno, "expected 'edge NAME SRC DST ...'")
            kv, flags = _keyvals(rest[3:], lineno, {"g"})
            bad = set(flags) - {"tree", "delegated"}
            if bad:
                raise ComplexSyntaxError(lineno, f"unknown flag {sorted(bad)[0]!r}")
            current = EdgeData(rest[0], rest[1], rest[2], "tree" in flags,
                               _word(kv.get("g", "1"), lineno), [], "delegated" in flags)
            _add(edges, rest[0], current, lineno)
        elif kind == "triangle":
            if not rest:
                raise ComplexSyntaxError(lineno, "missing triangle name")
            kv, extra = _keyvals(rest[1:], lineno, {"A", "B", "C", "phi", "psi", "eta"})
            if extra or not {"A", "B", "C"} <= set(kv):
                raise ComplexSyntaxError(lineno, "triangle needs A=, B=, C=")
            tri = TriangleData(rest[0], tuple(_edge_ref(kv[k]) for k in "ABC"),
                               *(_word(kv.get(k, "1"), lineno) for k in ("phi", "psi", "eta")))
            _add(triangles, rest[0], tri, lineno)
        else:
            raise ComplexSyntaxError(lineno, f"unknown directive {kind!r}")
    return OrbitComplexData(vertices, edges, triangles).validate()


def _add(table: dict, name: str, item, lineno: int) -> None:
    if name in table:
        raise ComplexSyntaxError(lineno, f"duplicate name {name!r}")
    table[name] = item


def format_complex(data: OrbitComplexData) -> str:
    q = shlex.quote
    lines = []
    for v in data.vertices.values():
        extra = f" delegate={v.delegated_to}" if v.delegated_to else ""
        lines.append(f"vertex {v.name} pres={v.pres_name}{extra}")
    for e in data.edges.values():
        flags = (" tree" if e.in_tree else "") + (" delegated" if e.delegated else "")
        lines.append(f"edge {e.name} {e.source} {e.target}{flags} g={q(str(e.g))}")
        for sym, s, d in e.edge_gens:
            lines.append(f"    gen {sym} src={q(str(s))} dst={q(str(d))}")
    for t in data.triangles.values():
        refs = " ".join(f"{k}={n}{'!' if r else ''}" for k, (n, r) in zip("ABC", t.edges))
        lines.append(f"triangle {t.name} {refs} phi={q(str(t.phi))} psi={q(str(t.psi))} eta={q(str(t.eta))}")
    return "\n".join(lines) + "\n"


# Assembly


def edge_symbol(edge: str) -> str:
    return f"g_{edge}"


@dataclass
class _Names:
    data: OrbitComplexData
    qualify: bool

    def symbol(self, vertex: str, g: str) -> str:
        return f"{vertex}_{g}" if self.qualify else g

    def lift(self, word: Word, vertex: str, what: str) -> Word:
        home = self.data.home(vertex)
        alphabet = set(self.data.alphabet(vertex))
        extra = word.symbols() - alphabet
        if extra:
            raise ImageOverWrongAlphabet(f"{what}: {sorted(extra)} not generators of {home}")
        return apply_map(word, {g: Word.gen(self.symbol(home, g)) for g in alphabet})


def assemble(data: OrbitComplexData, qualify: bool | None = None) -> FinitePresentation:
    """The presentation produced from orbit data.

    Vertex generators are renamed ``<vertex>_<gen>`` when ``qualify`` is true;
    by default this happens only if two vertices share a generator name.
    """
    own = [v for v in data.vertices.values() if v.delegated_to is None]
    if qualify is None:
        names = [g for v in own for g in v.presentation.generators]
        qualify = len(names) != len(set(names))
    nm = _Names(data, qualify)
    gens: list[str] = []
    rels: list[tuple[str, Word]] = []
    for v in own:
        P = v.presentation
        gens.extend(nm.symbol(v.name, g) for g in P.generators)
        images = {g: Word.gen(nm.symbol(v.name, g)) for g in P.generators}
        rels.extend((f"{v.name}.{n}", apply_map(r, images)) for n, r in P.relators)
    gsym = {e: Word.gen(edge_symbol(e)) for e in data.edges}
    gens.extend(edge_symbol(e) for e in data.edges)
    for e in data.tree():
        rels.append((f"tree.{e.name}", gsym[e.name]))
    for e in data.edges.values():
        g = gsym[e.name]
        for sym, src, dst in e.edge_gens:
            i = nm.lift(src, e.source, f"edge {e.name} gen {sym} src")
            c = nm.lift(dst, e.target, f"edge {e.name} gen {sym} dst")
            rels.append((f"edge.{e.name}.{sym}", ~g * i * g * ~c))
    for t in data.triangles.values():
        (A, ra), (B, rb), (C, rc) = t.edges
        U, V = data.ends(A, ra)
        W = data.ends(B, rb)[1]
        gA, gB, gC = (gsym[n] ** (-1 if r else 1) for n, r in t.edges)
        phi = nm.lift(t.phi, V, f"triangle {t.name} phi")
        psi = nm.lift(t.psi, W, f"triangle {t.name} psi")
        eta = nm.lift(t.eta, U, f"triangle {t.name} eta")
        rels.append((f"tri.{t.name}", gA * phi * gB * psi * ~gC * ~eta))
    return FinitePresentation(tuple(gens), tuple(rels))


def expected_counts(data: OrbitComplexData) -> tuple[int, int]:
    """(generators, relators) predicted by the closed-form count."""
    own = [v for v in data.vertices.values() if v.delegated_to is None]
    ngens = sum(len(v.presentation.generators) for v in own) + len(data.edges)
    nrels = (sum(len(v.presentation.relators) for v in own) + len(data.tree())
             + sum(len(e.edge_gens) for e in data.edges.values()) + len(data.triangles))
    return ngens, nrels


# The shipped complex


def shipped_complex(lookup: Callable[[str], FinitePresentation] | None = None) -> OrbitComplexData:
    text = (resources.files("fpg") / "data" / "complex.txt").read_text()
    return parse_complex(text, lookup)


# public name used by the command-line contract
paper_complex = shipped_complex


def substitution(data: OrbitComplexData, ambient: Mapping[str, Word] | None = None,
                 qualify: bool = True) -> dict[str, Word]:
    """Images of assembled generators in the ambient group.

    Vertex generators go to their ambient words, each ``g_E`` to the edge's
    stored element (tree and reversed edges carry the identity).
    """
    from .datasets import ambient_images

    nm = _Names(data, qualify)
    out = {}
    for v in data.vertices.values():
        if v.delegated_to is None:
            amb = ambient_images(v.presentation.generators) if ambient is None else ambient
            for g in v.presentation.generators:
                out[nm.symbol(v.name, g)] = amb[g]
    for e in data.edges.values():
        out[edge_symbol(e.name)] = e.g
    return out


@dataclass
class CrosscheckReport:
    generators: int
    relators: int
    expected: tuple[int, int]
    tree_relators: int
    abelian_torsion: list[int]
    abelian_rank: int
    gf2: list[tuple[str, bool]]

    @property
    def gf2_ok(self) -> bool:
        return all(ok for _, ok in self.gf2)

    @property
    def ok(self) -> bool:
        return ((self.generators, self.relators) == self.expected and self.abelian_torsion == [2, 2, 2]
                and self.abelian_rank == 0 and self.gf2_ok)


def crosscheck_assembly(data: OrbitComplexData | None = None,
                        base: FinitePresentation | None = None,
                        rep: Mapping | None = None) -> CrosscheckReport:
    """Assemble, push every relator into the ambient group, and test it there.

    The pushed-forward relators are checked against the mod 2 homology
    representation; their abelianization (as a presentation on the ambient
    generators) is also reported.
    """
    from .abelian import abelianization
    from .datasets import builtin
    from .gf2 import derive_assignment, verify_relations

    data = shipped_complex() if data is None else data
    base = builtin("main") if base is None else base
    rep = derive_assignment() if rep is None else rep
    P = assemble(data, qualify=True)
    sub = substitution(data)
    pushed = []
    for name, r in P.relators:
        img = apply_map(r, sub)
        if img:
            pushed.append((name, img))
    Q = FinitePresentation(base.generators, tuple(pushed))
    inv = abelianization(Q)
    return CrosscheckReport(
        generators=len(P.generators),
        relators=len(P.relators),
        expected=expected_counts(data),
        tree_relators=sum(1 for n, _ in P.relators if n.startswith("tree.")),
        abelian_torsion=list(inv.torsion),
        abelian_rank=inv.free_rank,
        gf2=verify_relations(Q, rep),
    )
