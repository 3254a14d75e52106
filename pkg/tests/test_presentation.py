import pytest
from hypothesis import given
import hypothesis.strategies as st

from fpg.abelian import abelianization
from fpg.consequence import Certificate
from fpg.datasets import NAMES, UnknownDataset, ambient_images, builtin, relations
from fpg.gf2 import derive_assignment, verify_relations
from fpg.presentation import (
    DuplicateGenerator,
    FinitePresentation,
    InvalidCertificate,
    NotSolvable,
    PresentationSyntaxError,
    UnknownGenerator,
    UnknownRelator,
    UnknownSymbol,
    duplicate_relators,
    parse_presentation,
    tietze_add_generator,
    tietze_add_relator,
    tietze_eliminate,
    tietze_remove_relator,
)
from fpg.words import Word, apply_map

from conftest import words

W = Word.parse


def test_parse_examples():
    P = parse_presentation("gens: a\nrel r1: a a a")
    assert P.generators == ("a",) and P["r1"] == W("a a a")
    Q = parse_presentation("gens: a b\nrel c: a b a^-1 b^-1\n# comment\n")
    assert Q.relator_names == ["c"]
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens: a\nrel: a$")
    with pytest.raises(UnknownSymbol):
        parse_presentation("gens: a\nrel r: a b")
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("rel r: a")


def test_relators_stored_cyclically_reduced():
    P = FinitePresentation.make(["a", "b"], [("r", "b a a b^-1")])
    assert P["r"] == W("a a")


def test_duplicates_are_flagged_not_rejected():
    P = FinitePresentation.make(["a", "b"], [("r", "a b"), ("s", "b^-1 a^-1"), ("t", "b a")])
    assert duplicate_relators(P) == [("r", "s"), ("r", "t")]


def test_duplicate_generator_and_relator_names():
    with pytest.raises(DuplicateGenerator):
        FinitePresentation.make(["a", "a"], [])
    with pytest.raises(Exception):
        FinitePresentation.make(["a"], [("r", "a"), ("r", "a a")])


@pytest.mark.parametrize("name,ngens,nrels", [
    ("main", 9, 27),
    ("stab_alpha3", 7, 22),
    ("stab_beta", 6, 18),
    ("stab_mu1", 6, 14),
    ("stab_delta", 6, 16),
])
def test_builtin_sizes(name, ngens, nrels):
    P = builtin(name)
    assert len(P.generators) == ngens
    assert len(P.relators) == nrels
    assert all(n.startswith(name + ".") for n in P.relator_names)


def test_builtin_unknown():
    with pytest.raises(UnknownDataset):
        builtin("nope")


def test_relations_transcribed_as_lhs_rhs_inverse():
    for name in NAMES:
        P = builtin(name)
        for tag, lhs, rhs in relations(name):
            full = W(lhs) * ~W(rhs)
            # stored form is the cyclic core of L R^-1
            assert len(P[f"{name}.{tag}"]) <= len(full)


def test_stabilizer_generators_live_in_main():
    gens = set(builtin("main").generators)
    for name in NAMES:
        imgs = ambient_images(builtin(name).generators)
        assert all(w.symbols() <= gens for w in imgs.values())


@pytest.mark.parametrize("name", NAMES)
def test_serialize_round_trip(name):
    P = builtin(name)
    Q = parse_presentation(P.serialize())
    assert Q == P
    assert Q.serialize() == P.serialize()


def test_add_generator():
    P = FinitePresentation.make(["a1", "a2"], [])
    Q = tietze_add_generator(P, "x", "a1 a2")
    assert Q.generators == ("a1", "a2", "x")
    assert Q.words == [W("x a2^-1 a1^-1")]
    with pytest.raises(DuplicateGenerator):
        tietze_add_generator(P, "a1", "a2")


def test_add_generator_restores_t():
    P = builtin("main")
    Q = tietze_eliminate(P, "t", "main.17")
    R = tietze_add_generator(Q, "t", "u3 u2 u1 a1 a2 a3")
    assert abelianization(R) == abelianization(P)
    # the new defining relator is relation (17) itself
    assert R["def.t"] == P["main.17"]


def test_eliminate_examples():
    P = builtin("main")
    Q = tietze_eliminate(P, "t", "main.17")
    assert len(Q.generators) == 8 and len(Q.relators) == 26
    for g, r in [("u2", "main.16"), ("u1", "main.15"), ("a4", "main.9")]:
        Q = tietze_eliminate(Q, g, r)
    assert set(Q.generators) == {"a1", "a2", "a3", "b", "u3"}
    with pytest.raises(NotSolvable):
        tietze_eliminate(FinitePresentation.make(["a1"], [("r", "a1 a1 a1")]), "a1", "r")
    with pytest.raises(UnknownGenerator):
        tietze_eliminate(P, "zz", "main.17")
    with pytest.raises(UnknownRelator):
        tietze_eliminate(P, "t", "main.99")


def test_eliminate_preserves_invariants_and_rep():
    P = builtin("main")
    rep = derive_assignment()
    Q = P
    for g, r in [("t", "main.17"), ("u2", "main.16"), ("u1", "main.15"), ("a4", "main.9")]:
        Q = tietze_eliminate(Q, g, r)
        assert abelianization(Q) == abelianization(P)
        assert all(ok for _, ok in verify_relations(Q, {x: rep[x] for x in Q.generators}))


def test_add_relator():
    P = builtin("main")
    r = W("a3 a3 a2 a4") ** 3
    from fpg.consequence import corpus
    _, target, cert = corpus()["prop51"]
    assert target == r
    Q = tietze_add_relator(P, r, cert)
    assert len(Q.relators) == 28
    with pytest.raises(InvalidCertificate):
        tietze_add_relator(P, "a1", Certificate())
    assert len(tietze_add_relator(P, "1", Certificate()).relators) == 28


def test_remove_relator():
    P = FinitePresentation.make(["a"], [("r3", "a a a"), ("r6", "a a a a a a")])
    two = Certificate(((Word(), "r3", 1), (Word(), "r3", 1)))
    Q = tietze_remove_relator(P, "r6", two)
    assert Q.relator_names == ["r3"]
    with pytest.raises(InvalidCertificate):
        tietze_remove_relator(P, "r3", Certificate(((Word(), "r6", 1),)))
    D = FinitePresentation.make(["a", "b"], [("r", "a b"), ("s", "a b")])
    assert tietze_remove_relator(D, "s", Certificate(((Word(), "r", 1),))).relator_names == ["r"]
    with pytest.raises(InvalidCertificate):
        tietze_remove_relator(builtin("main"), "main.5", Certificate())
    with pytest.raises(UnknownRelator):
        tietze_remove_relator(P, "zz", two)


@given(st.lists(words(("a", "b", "c"), 6), min_size=1, max_size=4), words(("a", "b"), 5))
def test_tietze_moves_preserve_abelianization(rels, defining):
    P = FinitePresentation(("a", "b", "c"), tuple((f"r{i}", w) for i, w in enumerate(rels)))
    before = abelianization(P)
    Q = tietze_add_generator(P, "x", defining)
    assert abelianization(Q) == before
    assert abelianization(tietze_eliminate(Q, "x", "def.x")) == before
    # a relator that is a consequence: the product of the first with itself conjugated
    r0 = P["r0"]
    extra = r0 * W("a") * r0 * W("a^-1")
    cert = Certificate(((Word(), "r0", 1), (W("a"), "r0", 1)))
    R = tietze_add_relator(P, extra, cert)
    assert abelianization(R) == before


@given(words(("a", "b"), 8), words(("a", "b"), 8))
def test_parse_serialize_identity(u, v):
    P = FinitePresentation(("a", "b"), (("p", u), ("q", v)))
    assert parse_presentation(P.serialize()) == P


def test_elimination_rewrites_by_substitution():
    P = FinitePresentation.make(["a", "b", "x"], [("d", "x a^-1 b^-1"), ("r", "x x")])
    Q = tietze_eliminate(P, "x", "d")
    assert Q["r"] == apply_map(W("x x"), {"x": W("b a"), "a": W("a"), "b": W("b")})
