from __future__ import annotations

from hypothesis import settings, strategies as st

from focksuture.fock import FockElement
from focksuture.words import parse_word

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def words(max_size: int = 7, min_size: int = 0):
    return st.text(alphabet="xy", min_size=min_size, max_size=max_size).map(parse_word)


@st.composite
def word_pairs(draw, max_size: int = 7):
    """Two words of the same grading."""
    w0 = draw(words(max_size))
    letters = list(str(w0))
    perm = draw(st.permutations(letters)) if letters else []
    return w0, parse_word("".join(perm))


@st.composite
def elements(draw, max_size: int = 5):
    """A small integer combination of words of one grading."""
    w0 = draw(words(max_size))
    letters = list(str(w0))
    terms = []
    for _ in range(draw(st.integers(1, 3))):
        perm = draw(st.permutations(letters)) if letters else []
        terms.append((parse_word("".join(perm)), draw(st.integers(-3, 3))))
    return FockElement(terms)
