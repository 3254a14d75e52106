"""The end-to-end verification suite behind ``fpg verify-paper``.

Every check takes a dataset lookup so that the same suite can be rerun on a
deliberately corrupted copy of the data (see :func:`check_mutation`).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

from .abelian import abelianization
from .brown import assemble, crosscheck_assembly, expected_counts, shipped_complex, parse_complex
from .consequence import corpus, verify_corpus
from .cosets import Completed, default_max_cosets, permutation_rep, todd_coxeter, verify_table
from .datasets import builtin
from .gf2 import (
    all_vectors,
    apply,
    derive_assignment,
    identity,
    matmul,
    pairing,
    preserves_pairing,
    solve_alpha4,
    transvection,
    vec,
    verify_relations,
)
from .presentation import FinitePresentation, tietze_eliminate
from .words import Word, commutator

Lookup = Callable[[str], FinitePresentation]

TIETZE_STEPS = (("t", "main.17"), ("u2", "main.16"), ("u1", "main.15"), ("a4", "main.9"))
GENERATING_SETS = (("a1", "u3", "b a1 a2 a3"), ("a1", "a2", "a3", "b", "u3"))
REQUIRED_CLAIMS = (
    "prop51", "RT12", "u2b", "local1",
    "stab_alpha3.iii", "stab_alpha3.iv", "stab_alpha3.v", "stab_alpha3.xiii", "stab_alpha3.xix",
    "stab_beta.xvii", "E2", "E6", "E9.a3", "E9.a4", "E9.u3b", "E10", "E11.a4", "E11.u3u2u3t",
)
MUTATED_RELATORS = ("main.4a", "main.11", "main.17")


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0
    limit: float | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name:<15} {self.seconds:7.3f}s  {self.detail}"


# individual checks; each returns (ok, detail)


def hom_count(P: FinitePresentation, m: int) -> int:
    """Number of homomorphisms to Z/m, by brute force over all assignments."""
    idx = {g: i for i, g in enumerate(P.generators)}
    rows = []
    for r in P.words:
        v = [0] * len(idx)
        for name, e in r:
            v[idx[name]] += e
        rows.append(v)
    return sum(
        all(sum(a * x for a, x in zip(row, xs)) % m == 0 for row in rows)
        for xs in itertools.product(range(m), repeat=len(idx))
    )


def abelian_quotient(P: FinitePresentation) -> FinitePresentation:
    comms = [(f"comm.{x}.{y}", commutator(Word.gen(x), Word.gen(y)))
             for x, y in itertools.combinations(P.generators, 2)]
    return P.with_relators(comms)


def check_abelianization(lookup: Lookup) -> tuple[bool, str]:
    P = lookup("main")
    inv = abelianization(P)
    ok = list(inv.torsion) == [2, 2, 2] and inv.free_rank == 0
    # independent route: |G^ab| by enumerating the abelianized presentation,
    # then Hom(G, Z2) has 8 elements iff that group is elementary abelian
    out = todd_coxeter(abelian_quotient(P), [], max_cosets=10_000)
    order = out.index if isinstance(out, Completed) else None
    homs = hom_count(P, 2)
    ok = ok and order == 8 and homs == 8
    return ok, f"{inv}; oracle order={order} |Hom(G,Z2)|={homs}"


def tietze_reduced(lookup: Lookup) -> FinitePresentation:
    Q = lookup("main")
    for g, r in TIETZE_STEPS:
        Q = tietze_eliminate(Q, g, r)
    return Q


def check_tietze(lookup: Lookup) -> tuple[bool, str]:
    Q = tietze_reduced(lookup)
    inv = abelianization(Q)
    ok = set(Q.generators) == {"a1", "a2", "a3", "b", "u3"} and list(inv.torsion) == [2, 2, 2] \
        and inv.free_rank == 0
    return ok, f"gens={' '.join(Q.generators)}; {inv}"


def check_generation(lookup: Lookup, max_cosets: int | None = None) -> tuple[bool, str]:
    cap = default_max_cosets() if max_cosets is None else max_cosets
    parts, ok = [], True
    for label, P in (("main", lookup("main")), ("reduced", tietze_reduced(lookup))):
        for H in GENERATING_SETS:
            out = todd_coxeter(P, list(H), max_cosets=cap)
            good = isinstance(out, Completed) and out.index == 1 and verify_table(P, list(H), out.table)
            ok &= good
            parts.append(f"{label}<{len(H)} gens>:{out.index if isinstance(out, Completed) else 'cap'}")
    return ok, " ".join(parts)


S3 = FinitePresentation.make(["x", "y"], [("r1", "x x"), ("r2", "y y y"), ("r3", "x y x y")])


def _compose(p, q):
    # apply p then q (right action, matching word order)
    return tuple(q[p[i]] for i in range(len(p)))


def cayley_matches(outcome: Completed, images: dict[str, tuple[int, ...]]) -> bool:
    """Is the coset action isomorphic to the right regular action of the group generated by ``images``?"""
    perm = permutation_rep(outcome)
    n = outcome.index
    ident = tuple(range(len(next(iter(images.values())))))
    elem = {1: ident}
    queue = [1]
    while queue:
        c = queue.pop()
        for g, p in perm.items():
            d = p[c - 1]
            e = _compose(elem[c], images[g])
            if d in elem:
                if elem[d] != e:
                    return False
            else:
                elem[d] = e
                queue.append(d)
    if len(elem) != n or len(set(elem.values())) != n:
        return False
    # closure of the brute-force group has the same size
    group = {ident}
    frontier = [ident]
    while frontier:
        a = frontier.pop()
        for p in images.values():
            b = _compose(a, p)
            if b not in group:
                group.add(b)
                frontier.append(b)
    return len(group) == n


def check_cosets(lookup: Lookup) -> tuple[bool, str]:
    out = todd_coxeter(S3, [])
    if not isinstance(out, Completed):
        return False, "enumeration did not complete"
    # x = (0 1), y = (0 1 2) acting on {0, 1, 2}
    images = {"x": (1, 0, 2), "y": (1, 2, 0)}
    ok = out.index == 6 and verify_table(S3, [], out.table) and cayley_matches(out, images)
    audited = ok
    for P, H in ((lookup("main"), ["a1", "a2", "a3", "b", "u3"]), (S3, ["x"]), (S3, ["y"])):
        o = todd_coxeter(P, H, max_cosets=10_000)
        if isinstance(o, Completed):
            audited &= verify_table(P, H, o.table)
    return ok and audited, f"S3 index={out.index}; regular action matches brute force: {ok}"


def check_corpus(lookup: Lookup) -> tuple[bool, str]:
    entries = corpus()
    missing = [c for c in REQUIRED_CLAIMS if c not in entries]
    rep = verify_corpus(lookup, entries)
    ok = rep.ok and not missing
    detail = f"{rep.passed}/{len(rep.entries)} certificates valid"
    if missing:
        detail += f"; missing {missing}"
    if rep.failures():
        detail += f"; failing {rep.failures()[:5]}"
    return ok, detail


def transvections_ok() -> bool:
    """Exhaustive over all 16 classes: isotropic ``c`` gives a pairing-preserving
    involution, a class with ``<c, c> = 1`` gives a singular map (no transvection)."""
    I = identity()
    for c in all_vectors():
        T = transvection(c)
        if pairing(c, c) == 0:
            if matmul(T, T) != I or not preserves_pairing(T):
                return False
        elif apply(T, c) != vec(0, 0, 0, 0):
            return False
    return True


def check_homology(lookup: Lookup) -> tuple[bool, str]:
    rep = derive_assignment()
    report = verify_relations(lookup("main"), rep)
    passed = sum(ok for _, ok in report)
    try:
        solve_alpha4(rep["a2"], rep["u3"])
        unique = True
    except ArithmeticError:
        unique = False
    involutive = transvections_ok()
    sym = all(pairing(x, y) == pairing(y, x) for x in all_vectors() for y in all_vectors())
    ok = passed == len(report) and unique and involutive and sym
    return ok, f"{passed}/{len(report)} relators; alpha4 unique={unique}; transvections ok={involutive}"


_TOY = {
    "X2": FinitePresentation.make(["x"], [("1", "x x")]),
    "Y3": FinitePresentation.make(["y"], [("1", "y y y")]),
}
TOY_HNN = "vertex V pres=X2\nedge E V V g=1\n    gen x src=x dst=x\n"
TOY_FREE = "vertex V pres=X2\nvertex W pres=Y3\nedge E V W tree g=1\n"


def toy_examples() -> list[tuple[FinitePresentation, FinitePresentation]]:
    """(assembled, hand-written) pairs for the two small examples."""
    hnn = assemble(parse_complex(TOY_HNN, _TOY.__getitem__))
    free = assemble(parse_complex(TOY_FREE, _TOY.__getitem__))
    return [
        (hnn, FinitePresentation.make(["x", "g_E"], [("V.1", "x x"), ("edge.E.x", "g_E^-1 x g_E x^-1")])),
        (free, FinitePresentation.make(["x", "y", "g_E"], [("V.1", "x x"), ("W.1", "y y y"), ("tree.E", "g_E")])),
    ]


def check_brown(lookup: Lookup) -> tuple[bool, str]:
    data = shipped_complex(lookup)
    rep = crosscheck_assembly(data, base=lookup("main"))
    counts_ok = (rep.generators, rep.relators) == expected_counts(data) and rep.generators == 43
    toys_ok = all(a == b for a, b in toy_examples())
    hnn_ab = abelianization(toy_examples()[0][0])
    toys_ok &= (hnn_ab.free_rank, list(hnn_ab.torsion)) == (1, [2])
    ok = counts_ok and rep.ok and rep.tree_relators == 4 and toys_ok
    failing = sum(not ok_ for _, ok_ in rep.gf2)
    return ok, (f"{rep.generators} gens, {rep.relators} rels; after substitution "
                f"torsion={rep.abelian_torsion} rank={rep.abelian_rank}; gf2 failures={failing}; "
                f"toy examples ok={toys_ok}")


# mutation smoke test


def flip_letter(word: Word, pos: int = 0) -> Word:
    """Change the sign of one letter (a one-bit corruption of the stored relator)."""
    letters = list(word.letters)
    name, e = letters[pos]
    letters[pos] = (name, -e)
    return Word(tuple(letters))


def mutated_lookup(relator: str, base: Lookup = builtin) -> Lookup:
    dataset = relator.split(".", 1)[0]
    P = base(dataset)
    bad = tuple((n, flip_letter(r) if n == relator else r) for n, r in P.relators)
    Q = FinitePresentation(P.generators, bad)
    return lambda name: Q if name == dataset else base(name)


def check_mutation(lookup: Lookup, relators=MUTATED_RELATORS) -> tuple[bool, str]:
    caught = []
    for rel in relators:
        bad = mutated_lookup(rel, lookup)
        results = run_suite(bad, only=[n for n in CHEAP_ORDER], stop_on_fail=True)
        failed = [r.name for r in results if not r.ok]
        caught.append((rel, failed[0] if failed else None))
    ok = all(f is not None for _, f in caught)
    return ok, "; ".join(f"{r} -> {f or 'undetected'}" for r, f in caught)


@dataclass
class Check:
    name: str
    run: Callable[[Lookup], tuple[bool, str]]
    limit: float | None = None
    description: str = ""


CHECKS = [
    Check("abelianization", check_abelianization, 1.0, "abelianization of main is Z2^3"),
    Check("tietze", check_tietze, 1.0, "elimination of t, u2, u1, a4"),
    Check("generation", check_generation, 60.0 * 4, "index-1 subgroups in main and reduced"),
    Check("cosets", check_cosets, None, "coset enumeration against a brute-force S3"),
    Check("corpus", check_corpus, 5.0, "consequence certificates"),
    Check("homology", check_homology, 1.0, "mod 2 homology representation"),
    Check("brown", check_brown, 5.0, "assembly from orbit data"),
    Check("mutation", check_mutation, None, "corrupted relators are detected"),
]
CHECK_NAMES = [c.name for c in CHECKS]
# cheaper checks first when hunting for any failure
CHEAP_ORDER = ("corpus", "abelianization", "homology", "tietze", "brown", "cosets", "generation")


def run_suite(lookup: Lookup = builtin, only=None, stop_on_fail: bool = False) -> list[CheckResult]:
    table = {c.name: c for c in CHECKS}
    names = list(only) if only else CHECK_NAMES
    for n in names:
        if n not in table:
            raise KeyError(n)
    out = []
    for n in names:
        c = table[n]
        t0 = time.perf_counter()
        try:
            ok, detail = c.run(lookup)
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        dt = time.perf_counter() - t0
        if c.limit is not None and dt > c.limit:
            ok, detail = False, f"{detail}; exceeded {c.limit}s"
        out.append(CheckResult(n, ok, detail, dt, c.limit))
        if stop_on_fail and not ok:
            break
    return out
