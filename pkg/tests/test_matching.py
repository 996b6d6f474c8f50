import pytest
from hypothesis import given, strategies as st

from multiseg.core import Line, Multisegment, Point, Segment, contragredient
from multiseg.matching import candidates_quotient, candidates_socle, matching, matching_primed

from conftest import M, multisegments, points


def test_matching_full_example():
    m = M((1, 3), (1, 1), (0, 2), (0, 0))
    rep = matching(m, 0)
    # canonical positions: [1,3]=0, [1,1]=1, [0,2]=2, [0,0]=3
    assert rep.j == (2, 3)
    assert rep.i == (0, 1)
    assert (rep.w, rep.u, rep.l_prime) == (2, 0, 0)
    assert rep.as_dict()["j"] == [2, 3]


def test_matching_nothing_begins_at_c():
    rep = matching(M((1, 2)), 0)
    assert (rep.t, rep.w, rep.u, rep.l_prime) == (0, 0, 1, 0)
    assert rep.l == (0,)


def test_matching_unmatched():
    rep = matching(M((0, 1)), 0)
    assert rep.j == (0,) and rep.i == (None,)
    assert rep.s == (0,) and rep.l_prime == 1 and rep.u == 0


def test_primed_examples():
    rep = matching_primed(M((0, 0)), 1)
    assert rep.t == 0 and rep.l == (0,) and rep.u == 1
    rep = matching_primed(M((0, 1), (1, 2)), 0)
    assert rep.t == 0 and rep.u == 0
    rep = matching_primed(M((0, 1), (0, 0)), 1)
    assert rep.j == (0,) and rep.i == (None,) and rep.u == 1


def test_greedy_takes_tightest_partner():
    # [0,1] goes first and takes the shortest begin-1 segment ending after 1.
    m = M((0, 0), (0, 1), (1, 2), (1, 3))
    rep = matching(m, 0)
    pairs = {m[j]: (None if i is None else m[i]) for j, i in zip(rep.j, rep.i)}
    assert pairs == {Segment(0, 1): Segment(1, 2), Segment(0, 0): Segment(1, 3)}


def test_free_list_order():
    m = M((1, 1), (1, 2), (1, 4))
    assert [m[p] for p in matching(m, 0).l] == [Segment(1, 4), Segment(1, 2), Segment(1, 1)]
    m = M((-2, 1), (0, 1), (1, 1))
    # primed at c = 2: free segments ending at 1, longest first
    assert [m[p] for p in matching_primed(m, 2).l] == [Segment(-2, 1), Segment(0, 1), Segment(1, 1)]


def test_other_lines_are_ignored():
    L = Line("L")
    m = Multisegment([Segment(1, 2, L), Segment(1, 2)])
    rep = matching(m, Point(0, L))
    assert [m[p] for p in rep.l] == [Segment(1, 2, L)]


@pytest.mark.parametrize("m, c, want", [
    (M((1, 2)), 0, [M((0, 0), (1, 2)), M((0, 2))]),
    (M((0, 1), (1, 2)), 0, [M((0, 0), (0, 1), (1, 2))]),
    (Multisegment(), 3, [M((3, 3))]),
])
def test_candidates_socle(m, c, want):
    assert candidates_socle(m, c) == want


@pytest.mark.parametrize("m, c, want", [
    (M((0, 0)), 1, [M((1, 1), (0, 0)), M((0, 1))]),
    (Multisegment(), -2, [M((-2, -2))]),
    (M((0, 1), (1, 2)), 0, [M((0, 0), (0, 1), (1, 2))]),
])
def test_candidates_quotient(m, c, want):
    assert candidates_quotient(m, c) == want


@given(multisegments(max_size=6), points)
def test_matching_invariants(m, c):
    rep = matching(m, c)
    assert rep.t == rep.w + len(rep.s)
    matched = [i for i in rep.i if i is not None]
    assert len(set(matched)) == len(matched) == rep.w
    assert not set(matched) & set(rep.l)
    for j, i in zip(rep.j, rep.i):
        assert m[j].b == c
        if i is not None:
            assert m[i].b == c + 1 and m[i].e > m[j].e
    assert all(m[p].b == c + 1 for p in rep.l)
    assert len(candidates_socle(m, c)) == rep.u + 1
    assert len(candidates_quotient(m, c)) == matching_primed(m, c).u + 1


def _view(m, rep, flip=False):
    f = (lambda s: s.reflect()) if flip else (lambda s: s)
    pairs = sorted((f(m[j]).sort_key(), () if i is None else f(m[i]).sort_key())
                   for j, i in zip(rep.j, rep.i))
    return pairs, [f(m[p]).sort_key() for p in rep.l]


@given(multisegments(max_size=6), points)
def test_primed_is_mirror_of_unprimed(m, c):
    """Matching a reflected multisegment at -c is the reflection of the primed matching."""
    r = contragredient(m)
    assert _view(m, matching_primed(m, c)) == _view(r, matching(r, -c), flip=True)
