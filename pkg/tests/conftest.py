import hypothesis.strategies as st
import pytest
from hypothesis import settings

from fpg.words import Word

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GENS = ("a", "b", "c")


def words(gens=GENS, max_size=10):
    letters = st.tuples(st.sampled_from(gens), st.sampled_from((1, -1)))
    return st.lists(letters, max_size=max_size).map(lambda ls: Word(tuple(ls)))


@pytest.fixture
def W():
    return Word.parse
