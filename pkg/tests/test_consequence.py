import time

import pytest
from hypothesis import given
import hypothesis.strategies as st

from fpg.consequence import (
    Certificate,
    CertificateSyntaxError,
    DerivationReport,
    check_certificate,
    corpus,
    corpus_claims,
    expand_certificate,
    format_certificate,
    greedy_reduce,
    inline_lemmas,
    parse_certificate,
    search_certificate,
    search_derivation,
    shortlex_words,
    verify_corpus,
)
from fpg.datasets import builtin
from fpg.presentation import FinitePresentation, UnknownRelator
from fpg.verify import REQUIRED_CLAIMS
from fpg.words import Word, conjugate

from conftest import words

W = Word.parse
E = Word()
MAIN = builtin("main")
CYC3 = FinitePresentation.make(["a"], [("r", "a a a")])
TOY = FinitePresentation.make(["a", "b"], [("r", "a b a^-1 b^-1"), ("s", "a a"), ("q", "b b b")])


def test_expand_examples():
    assert expand_certificate(MAIN, Certificate()) == E
    assert expand_certificate(MAIN, Certificate(((E, "main.4a", 1),))) == MAIN["main.4a"]
    assert expand_certificate(MAIN, Certificate(((E, "main.4a", 1), (E, "main.4a", -1)))) == E
    with pytest.raises(UnknownRelator):
        expand_certificate(MAIN, Certificate(((E, "main.99", 1),)))


def test_check_examples():
    assert check_certificate(MAIN, MAIN["main.4a"], Certificate(((E, "main.4a", 1),)))
    assert not check_certificate(MAIN, W("a1"), Certificate())


def test_prop51_over_restricted_relators():
    P = MAIN.restrict(["main.2", "main.4a", "main.4b", "main.4c", "main.6"])
    pres, target, cert = corpus()["prop51"]
    assert pres == "main"
    assert target == W("a3 a3 a2 a4") ** 3
    assert check_certificate(P, target, cert)


def test_certificate_validation():
    with pytest.raises(ValueError):
        Certificate(((E, "r", 2),))
    c = Certificate((("a b", "r", 1),))
    assert c.factors[0][0] == W("a b")


def test_search_examples():
    c = search_certificate(MAIN, MAIN["main.1"], max_factors=1, max_conj_len=0)
    assert c is not None and len(c) == 1
    assert search_certificate(FinitePresentation.make(["a1"], []), W("a1"), 3, 3) is None
    c = search_certificate(CYC3, W("a a a a a a"), max_factors=2, max_conj_len=0)
    assert c is not None and len(c) == 2
    assert search_certificate(CYC3, E) == Certificate()
    with pytest.raises(ValueError):
        search_certificate(CYC3, W("a"), max_factors=-1)


def test_search_is_deterministic_and_shortlex_least():
    t = W("b a b^-1 a^-1 a a")
    c1 = search_certificate(TOY, t, 3, 2)
    c2 = search_certificate(TOY, t, 3, 2)
    assert c1 == c2 and check_certificate(TOY, t, c1)


def test_shortlex_order():
    ws = list(shortlex_words(["a", "b"], 1))
    assert [str(w) for w in ws] == ["1", "a", "a^-1", "b", "b^-1"]
    assert len(list(shortlex_words(["a", "b"], 2))) == 1 + 4 + 12


factor = st.tuples(words(("a", "b"), 3), st.sampled_from(["r", "s", "q"]), st.sampled_from([1, -1]))
certs = st.lists(factor, max_size=4).map(lambda fs: Certificate(tuple(fs)))


@given(certs)
def test_round_trip(c):
    assert check_certificate(TOY, expand_certificate(TOY, c), c)
    text = format_certificate("toy", expand_certificate(TOY, c), c, claim="random")
    name, target, c2 = parse_certificate(text)
    assert (name, c2) == ("toy", c)
    assert check_certificate(TOY, target, c2)


@given(certs, words(("a", "b"), 4))
def test_conjugation_stability(c, u):
    target = expand_certificate(TOY, c)
    assert check_certificate(TOY, conjugate(target, u), c.conjugated(u))


@given(certs)
def test_inverse_certificate(c):
    target = expand_certificate(TOY, c)
    assert check_certificate(TOY, ~target, c.inverse())


@given(st.lists(factor, min_size=1, max_size=2).map(lambda fs: Certificate(tuple(fs))))
def test_search_soundness(c):
    target = expand_certificate(TOY, c)
    found = search_certificate(TOY, target, max_factors=2, max_conj_len=1)
    if found is not None:
        assert check_certificate(TOY, target, found)


def test_parse_errors():
    with pytest.raises(CertificateSyntaxError):
        parse_certificate("target: a\n")
    with pytest.raises(CertificateSyntaxError):
        parse_certificate("presentation: p\ntarget: a\nfactor: 1 | r | +2\n")
    with pytest.raises(CertificateSyntaxError):
        parse_certificate("presentation: p\ntarget: a\nbogus: 1\n")


def test_derivation_search():
    P = FinitePresentation.make(["a", "b"], [("c", "a b a^-1 b^-1")])
    res = search_derivation(P, W("a b a"), W("b a a"), max_steps=2)
    assert res is not None
    assert check_certificate(P, W("a b a") * ~W("b a a"), res.certificate)
    assert search_derivation(P, W("a"), W("b"), max_steps=3) is None


def test_greedy_reduce():
    c = greedy_reduce(CYC3, W("a a a a a a"))
    assert c is not None and check_certificate(CYC3, W("a a a a a a"), c)


def test_inline_lemmas():
    P = FinitePresentation.make(["a"], [("r", "a a a")])
    six = W("a") ** 6
    lemma_cert = Certificate(((E, "r", 1), (E, "r", 1)))
    aug = P.with_relators([("L.six", six)])
    outer = Certificate(((W("a"), "L.six", -1),))
    target = conjugate(~six, W("a"))
    assert check_certificate(aug, target, outer)
    flat = inline_lemmas(outer, {"L.six": (six, lemma_cert)})
    assert flat.relators_used() == {"r"}
    assert check_certificate(P, target, flat)


def test_corpus_complete_and_valid():
    entries = corpus()
    for name in REQUIRED_CLAIMS:
        assert name in entries
    t0 = time.perf_counter()
    rep = verify_corpus()
    assert time.perf_counter() - t0 < 5
    assert isinstance(rep, DerivationReport)
    assert rep.ok and rep.passed == len(entries)
    claims = corpus_claims()
    assert set(claims) == set(entries) and all(claims.values())


@pytest.mark.parametrize("name,lhs,rhs", [
    ("RT12", "u1 u2 u1", "u2 u1 u2"),
    ("u2b", "u2^-1 b u2^-1 b", "1"),
    ("local1", "a2^-1 u1 u2 u1 a2", "a3 u1 u3^-1 t"),
    ("E2", "a3 a3 a2 a3 a3 a2", "a3 t a1^-1 u1^-1 a4^-1"),
    ("E6", "u3 u2 u3", "a3^-1 a2^-1 a1^-1 t u1^-1 u3"),
])
def test_corpus_targets(name, lhs, rhs):
    pres, target, cert = corpus()[name]
    assert pres == "main"
    assert target == W(lhs) * ~W(rhs)


def test_corpus_report_flags_missing_relator():
    main = builtin("main")
    broken = {"main": main.without("main.1")}
    rep = verify_corpus(broken.__getitem__)
    assert not rep.ok
    assert rep.failures()
    assert all(isinstance(t, Word) for _, t, _ in rep.entries)
