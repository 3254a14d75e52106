import pytest
from hypothesis import given
import hypothesis.strategies as st

from fpg.words import (
    MissingImage,
    Word,
    WordSyntaxError,
    apply_map,
    conjugate,
    cyclically_reduce,
    invert,
    is_cyclically_reduced,
    multiply,
    reduce,
    rotations,
)

from conftest import GENS, words

W = Word.parse


@pytest.mark.parametrize("text,expected", [
    ("a1 a1^-1", "1"),
    ("1", "1"),
    ("a1 b b^-1 a1", "a1 a1"),
])
def test_reduce_examples(text, expected):
    assert reduce(W(text)) == W(expected)
    assert str(W(text)) == expected


@pytest.mark.parametrize("u,v,expected", [
    ("a1", "a1^-1", "1"),
    ("1", "u3", "u3"),
    ("a1 a2", "a2^-1 a3", "a1 a3"),
])
def test_multiply_examples(u, v, expected):
    assert multiply(W(u), W(v)) == W(expected)


@pytest.mark.parametrize("u,expected", [("a1 a2", "a2^-1 a1^-1"), ("1", "1"), ("u3^-1", "u3")])
def test_invert_examples(u, expected):
    assert invert(W(u)) == W(expected)


@pytest.mark.parametrize("w,u,expected", [
    ("a2", "1", "a2"),
    ("a2", "u3", "u3 a2 u3^-1"),
    ("a1^-1", "a1", "a1^-1"),
])
def test_conjugate_examples(w, u, expected):
    assert conjugate(W(w), W(u)) == W(expected)


@pytest.mark.parametrize("w,core,conj", [
    ("a1 a2 a1^-1", "a2", "a1"),
    ("a1 a2", "a1 a2", "1"),
    ("1", "1", "1"),
])
def test_cyclically_reduce_examples(w, core, conj):
    assert cyclically_reduce(W(w)) == (W(core), W(conj))


def test_apply_map_examples():
    m = {"a4": W("a2^-1 u3 a2^-1 u3^-1 a2")}
    assert apply_map(W("a4"), m) == W("a2^-1 u3 a2^-1 u3^-1 a2")
    assert apply_map(W("a4^-1"), m) == W("a2^-1 u3 a2 u3^-1 a2")
    assert apply_map(W("a1 a1^-1"), {}) == Word()
    with pytest.raises(MissingImage) as exc:
        apply_map(W("a1 x"), {"a1": W("a1")})
    assert exc.value.symbol == "x"


@pytest.mark.parametrize("bad", ["a^-2", "1a", "a$", "a^1"])
def test_parse_rejects(bad):
    with pytest.raises(WordSyntaxError):
        W(bad)


def test_letter_validation():
    with pytest.raises(ValueError):
        Word((("a", 2),))
    with pytest.raises(ValueError):
        Word((("9x", 1),))


def test_power():
    assert W("a b") ** 3 == W("a b a b a b")
    assert W("a b") ** -1 == W("b^-1 a^-1")
    assert W("a") ** 0 == Word()


@given(words())
def test_reduced_on_construction(w):
    for (x, e), (y, f) in zip(w.letters, w.letters[1:]):
        assert not (x == y and e == -f)
    assert reduce(reduce(w)) == w
    assert W(str(w)) == w


@given(st.lists(st.tuples(st.sampled_from(GENS), st.sampled_from((1, -1))), max_size=12))
def test_reduce_never_lengthens(letters):
    assert len(reduce(letters)) <= len(letters)


@given(words(), words(), words())
def test_group_laws(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert invert(invert(u)) == u
    assert invert(u * v) == invert(v) * invert(u)
    assert u * invert(u) == Word()


@given(words(), words())
def test_conjugation_keeps_core_length(w, u):
    assert len(cyclically_reduce(conjugate(w, u))[0]) == len(cyclically_reduce(w)[0])


@given(words())
def test_cyclic_decomposition(w):
    core, v = cyclically_reduce(w)
    assert conjugate(core, v) == w
    assert is_cyclically_reduced(core)
    for r in rotations(core):
        assert len(r) == len(core)


@given(words(), words(), st.fixed_dictionaries({g: words(("x", "y"), 4) for g in GENS}))
def test_apply_map_is_homomorphism(u, v, m):
    assert apply_map(u * v, m) == apply_map(u, m) * apply_map(v, m)
    assert apply_map(invert(u), m) == invert(apply_map(u, m))
