from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from multiseg.core import Line, Multisegment, Segment
from multiseg.corpus import CorpusSpec, enumerate_corpus

# exact arithmetic on Fractions is slow enough that timing deadlines only cause flakes
settings.register_profile("default", deadline=None)
settings.load_profile("default")


def M(*pairs, line=None):
    """Shorthand: ``M((0, 2), (1, 1))``."""
    if line is None:
        return Multisegment.of(*pairs)
    return Multisegment.of(*pairs, line=line)


@st.composite
def segments(draw, lo=-3, hi=4, max_len=4, halves=False, lines=(Line(),)):
    b = draw(st.integers(lo, hi))
    if halves and draw(st.booleans()):
        b = b + Fraction(1, 2)
    n = draw(st.integers(0, max_len - 1))
    return Segment(b, b + n, draw(st.sampled_from(lines)))


def multisegments(max_size=5, **kw):
    return st.lists(segments(**kw), max_size=max_size).map(Multisegment)


points = st.integers(-4, 6)


@pytest.fixture(scope="session")
def small_corpus():
    return list(enumerate_corpus(CorpusSpec((0, 3), 3, 2)))
